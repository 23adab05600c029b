use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Sparse polynomial in canonical form: terms strictly descending under
/// `order`, no zero coefficients. The zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    field: Field,
    order: MonomialOrder,
    terms: Vec<(Monomial, Scalar)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Scale,
}

#[derive(Clone, Debug)]
pub enum Operand<'a> {
    Poly(&'a Polynomial),
    Scalar(&'a Scalar),
}

/// Checked arithmetic entry point; rejects operands from different rings.
pub fn poly_arith(op: ArithOp, f: &Polynomial, g: Operand<'_>) -> Result<Polynomial> {
    match (op, g) {
        (ArithOp::Scale, Operand::Scalar(c)) => {
            if c.field() != f.field {
                return Err(Error::RingMismatch(format!(
                    "scalar over {} with polynomial over {}",
                    c.field().descriptor(),
                    f.field.descriptor()
                )));
            }
            Ok(f.scale(c))
        }
        (ArithOp::Scale, Operand::Poly(_)) => {
            Err(Error::Input("scale expects a scalar operand".into()))
        }
        (op, Operand::Scalar(c)) => {
            let g = Polynomial::constant(f.nvars, f.field, f.order, c.clone());
            poly_arith(op, f, Operand::Poly(&g))
        }
        (op, Operand::Poly(g)) => {
            f.check_compatible(g)?;
            let g = if g.order != f.order { g.with_order(f.order) } else { g.clone() };
            Ok(match op {
                ArithOp::Add => f.add_poly(&g),
                ArithOp::Sub => f.sub_poly(&g),
                ArithOp::Mul => f.mul_poly(&g),
                ArithOp::Scale => unreachable!(),
            })
        }
    }
}

/// The order-maximal term of `f` under `ord`.
pub fn leading_term(f: &Polynomial, ord: MonomialOrder) -> Result<(Monomial, Scalar)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if ord == f.order {
        return Ok(f.terms[0].clone());
    }
    let best = f
        .terms
        .iter()
        .max_by(|a, b| ord.cmp(&a.0, &b.0))
        .expect("nonzero");
    Ok(best.clone())
}

impl Polynomial {
    pub fn zero(nvars: usize, field: Field, order: MonomialOrder) -> Self {
        Polynomial {
            nvars,
            field,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, field: Field, order: MonomialOrder, c: Scalar) -> Self {
        Polynomial::monomial(nvars, field, order, Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize, field: Field, order: MonomialOrder) -> Self {
        Polynomial::constant(nvars, field, order, field.one())
    }

    pub fn var(nvars: usize, field: Field, order: MonomialOrder, index: usize) -> Self {
        Polynomial::monomial(nvars, field, order, Monomial::var(nvars, index, 1), field.one())
    }

    pub fn monomial(nvars: usize, field: Field, order: MonomialOrder, m: Monomial, c: Scalar) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            nvars,
            field,
            order,
            terms,
        }
    }

    /// Builds the canonical form from arbitrary terms (unsorted, repeated,
    /// possibly zero).
    pub fn from_terms(
        nvars: usize,
        field: Field,
        order: MonomialOrder,
        terms: Vec<(Monomial, Scalar)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial width mismatch");
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            nvars,
            field,
            order,
            terms,
        }
    }

    pub(crate) fn from_sorted_terms(
        nvars: usize,
        field: Field,
        order: MonomialOrder,
        terms: Vec<(Monomial, Scalar)>,
    ) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            nvars,
            field,
            order,
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lc(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn constant_term(&self) -> Scalar {
        self.terms
            .iter()
            .find(|t| t.0.is_one())
            .map(|t| t.1.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn check_compatible(&self, o: &Polynomial) -> Result<()> {
        if self.nvars != o.nvars || self.field != o.field {
            return Err(Error::RingMismatch(format!(
                "{} variables over {} vs {} variables over {}",
                self.nvars,
                self.field.descriptor(),
                o.nvars,
                o.field.descriptor()
            )));
        }
        Ok(())
    }

    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            order,
            terms,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.field, self.order);
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
            ..self.clone_empty()
        }
    }

    fn clone_empty(&self) -> Polynomial {
        Polynomial::zero(self.nvars, self.field, self.order)
    }

    pub fn make_monic(&self) -> Polynomial {
        match self.lc() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// `self * c * m`
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.clone_empty();
        }
        Polynomial {
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.mul(c))).collect(),
            ..self.clone_empty()
        }
    }

    fn merge(&self, o: &Polynomial, negate: bool) -> Polynomial {
        let ord = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &o.terms);
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if negate { c.neg() } else { c.clone() })),
        );
        Polynomial {
            terms: out,
            ..self.clone_empty()
        }
    }

    fn add_poly(&self, o: &Polynomial) -> Polynomial {
        self.merge(o, false)
    }

    fn sub_poly(&self, o: &Polynomial) -> Polynomial {
        self.merge(o, true)
    }

    fn mul_poly(&self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return self.clone_empty();
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.with_order(self.order).mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &o.terms {
                terms.push((m.mul(n), a.mul(b)));
            }
        }
        Polynomial::from_terms(self.nvars, self.field, self.order, terms)
    }

    /// `self - c * m * g`, the elementary reduction step.
    pub(crate) fn sub_scaled(&self, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        let shifted = Polynomial {
            terms: g.terms.iter().map(|(t, a)| (t.mul(m), a.mul(c))).collect(),
            ..self.clone_empty()
        };
        self.sub_poly(&shifted)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars, self.field, self.order);
        for _ in 0..k {
            acc = acc.mul_poly(self);
        }
        acc
    }

    /// Exact quotient `self / g` when `g` divides `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        let g = g.with_order(self.order);
        let (lm, lc) = g.terms.first()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let q = lm.quotient_of(&m);
            let qc = c.mul(&lc_inv);
            rem = rem.sub_scaled(&qc, &q, &g);
            quot.push((q, qc));
        }
        Some(Polynomial::from_terms(self.nvars, self.field, self.order, quot))
    }

    /// Substitutes polynomial images for the variables (all over one target ring).
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let target = &images[0];
        let mut acc = Polynomial::zero(target.nvars, target.field, target.order);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target.nvars, target.field, target.order, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul_poly(&images[i].pow(e as u32));
                }
            }
            acc = acc.add_poly(&t);
        }
        acc
    }

    /// Renames variable `i` to position `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize], order: MonomialOrder) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())).collect();
        Polynomial::from_terms(self.nvars, self.field, order, terms)
    }

    /// Embeds into a ring with one extra variable placed first, raised to `exp`.
    pub(crate) fn prepend_var(&self, exp: u16, order: MonomialOrder) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_extra_var(true, exp), c.clone()))
            .collect();
        Polynomial::from_terms(self.nvars + 1, self.field, order, terms)
    }

    /// Drops the first `k` variables; callers guarantee they do not occur.
    pub(crate) fn drop_front_vars(&self, k: usize, order: MonomialOrder) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                debug_assert!(m.exponents()[..k].iter().all(|&e| e == 0));
                (m.drop_front(k), c.clone())
            })
            .collect();
        Polynomial::from_terms(self.nvars - k, self.field, order, terms)
    }

    pub fn involves_any(&self, vars: &[usize]) -> bool {
        self.terms
            .iter()
            .any(|(m, _)| vars.iter().any(|&v| m.exponents()[v] > 0))
    }

    /// Canonical text in the expression grammar, e.g. `x^2 - 3*x*y + 1`.
    pub fn format(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.format(names));
            } else {
                out.push_str(&format!("{}*{}", abs, m.format(names)));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{}", i + 1)).collect();
        write!(f, "{}", self.format(&names))
    }
}

fn assert_same_ring(a: &Polynomial, b: &Polynomial) {
    if let Err(e) = a.check_compatible(b) {
        panic!("{e}");
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        assert_same_ring(self, o);
        self.add_poly(&o.with_order(self.order))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        assert_same_ring(self, o);
        self.sub_poly(&o.with_order(self.order))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        assert_same_ring(self, o);
        self.mul_poly(o)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.field.from_i64(-1))
    }
}
