use std::cmp::Ordering;

use crate::poly::{Monomial, MonomialOrder, Polynomial, Scalar};

/// Reducer polynomial with its leading data unpacked for fast divisor tests.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    pub poly: Polynomial,
    pub lead: Monomial,
    pub mask: u64,
}

impl Reducer {
    pub fn new(poly: Polynomial) -> Self {
        let lead = poly.lm().expect("nonzero reducer").clone();
        let mask = lead.mask();
        Reducer { poly, lead, mask }
    }
}

pub(crate) fn find_divisor<'a, I>(m: &Monomial, reducers: I) -> Option<&'a Reducer>
where
    I: IntoIterator<Item = &'a Reducer>,
{
    let mm = m.mask();
    reducers
        .into_iter()
        .find(|r| r.mask & !mm == 0 && r.lead.divides(m))
}

/// `acc - c*m*g` where `acc` is ascending and `g` is a monic polynomial in
/// descending order whose leading term cancels the head of `acc`.
fn sub_shifted(
    acc: Vec<(Monomial, Scalar)>,
    c: &Scalar,
    m: &Monomial,
    g: &Polynomial,
    ord: MonomialOrder,
) -> Vec<(Monomial, Scalar)> {
    let gt = g.terms();
    let mut out = Vec::with_capacity(acc.len() + gt.len());
    let mut a = acc.into_iter().peekable();
    let mut b = gt.iter().rev().map(|(t, k)| (t.mul(m), k.mul(c))).peekable();
    loop {
        let step = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => break,
        };
        match step {
            Ordering::Less => out.push(a.next().unwrap()),
            Ordering::Greater => {
                let (t, k) = b.next().unwrap();
                out.push((t, k.neg()));
            }
            Ordering::Equal => {
                let (t, x) = a.next().unwrap();
                let (_, y) = b.next().unwrap();
                let s = x.sub(&y);
                if !s.is_zero() {
                    out.push((t, s));
                }
            }
        }
    }
    out
}

/// Full normal form of `f` (same order as the reducers), reducing every term.
/// With `top_only` the loop stops at the first irreducible leading term.
pub(crate) fn reduce(f: &Polynomial, reducers: &[Reducer], top_only: bool) -> Polynomial {
    let ord = f.order();
    let mut acc: Vec<(Monomial, Scalar)> = f.terms().iter().rev().cloned().collect();
    let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
    while let Some((m, c)) = acc.last() {
        match find_divisor(m, reducers) {
            Some(r) => {
                let q = r.lead.quotient_of(m);
                let c = c.div(r.poly.lc().unwrap()).expect("nonzero lead");
                acc = sub_shifted(acc, &c, &q, &r.poly, ord);
            }
            None => {
                if top_only {
                    rem.extend(acc.drain(..).rev());
                    break;
                }
                rem.push(acc.pop().unwrap());
            }
        }
    }
    Polynomial::from_sorted_terms(f.nvars(), f.field(), ord, rem)
}
