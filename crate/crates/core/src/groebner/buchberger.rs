use std::collections::BTreeSet;

use super::reduce::{reduce, Reducer};
use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial};

pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// Queue key: (lcm degree, kind, i, j). Kind 0 is a pending input, kind 1 an
/// S-pair, so inputs of a degree are absorbed before pairs of that degree.
type Task = (u32, u8, usize, usize);

struct State {
    ord: MonomialOrder,
    cap: u32,
    basis: Vec<Reducer>,
    active: Vec<bool>,
    queue: BTreeSet<Task>,
    inputs: Vec<Polynomial>,
}

impl State {
    fn lcm(&self, i: usize, j: usize) -> Monomial {
        self.basis[i].lead.lcm(&self.basis[j].lead)
    }

    fn spoly(&self, i: usize, j: usize) -> Polynomial {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let l = a.lead.lcm(&b.lead);
        let fa = a.poly.mul_term(&a.lead.quotient_of(&l), b.poly.lc().unwrap());
        let fb = b.poly.mul_term(&b.lead.quotient_of(&l), a.poly.lc().unwrap());
        &fa - &fb
    }

    fn check_cap(&self, degree: u32) -> Result<()> {
        if degree > self.cap {
            return Err(Error::DegreeCap {
                degree,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Gebauer-Moller update after appending basis element `t`.
    fn update(&mut self, t: usize) {
        let lt = self.basis[t].lead.clone();
        let single_t = self.basis[t].poly.is_monomial();

        // old pairs made redundant by the chain criterion
        let lcm_of = |i: usize, j: usize| self.basis[i].lead.lcm(&self.basis[j].lead);
        let dropped: Vec<Task> = self
            .queue
            .iter()
            .filter(|&&(_, kind, i, j)| {
                if kind != 1 {
                    return false;
                }
                let l = lcm_of(i, j);
                lt.divides(&l) && lcm_of(i, t) != l && lcm_of(j, t) != l
            })
            .cloned()
            .collect();
        for p in dropped {
            self.queue.remove(&p);
        }

        // candidate new pairs
        let mut cands: Vec<(usize, Monomial, bool)> = (0..t)
            .filter(|&i| self.active[i])
            .map(|i| {
                let l = self.lcm(i, t);
                (i, l, self.basis[i].lead.coprime(&lt))
            })
            .collect();
        // M criterion: drop (i,t) if some (j,t) has lcm strictly dividing it
        let keep: Vec<bool> = cands
            .iter()
            .map(|(_, l, _)| {
                !cands
                    .iter()
                    .any(|(_, l2, _)| l2 != l && l2.divides(l))
            })
            .collect();
        let mut k = keep.into_iter();
        cands.retain(|_| k.next().unwrap());
        // F criterion: one pair per lcm, none at all if any of them is coprime
        let mut chosen: Vec<(usize, Monomial, bool)> = Vec::new();
        for (i, l, cop) in cands {
            match chosen.iter_mut().find(|c| c.1 == l) {
                Some(c) => c.2 |= cop,
                None => chosen.push((i, l, cop)),
            }
        }
        for (i, l, cop) in chosen {
            if cop || (single_t && self.basis[i].poly.is_monomial()) {
                continue;
            }
            self.queue.insert((l.degree(), 1, i, t));
        }

        for i in 0..t {
            if self.active[i] && lt.divides(&self.basis[i].lead) {
                self.active[i] = false;
            }
        }
        self.active.push(true);
    }

    fn insert(&mut self, h: Polynomial) -> Result<()> {
        let h = h.make_monic();
        self.check_cap(h.total_degree().unwrap_or(0))?;
        self.basis.push(Reducer::new(h));
        let t = self.basis.len() - 1;
        self.update(t);
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        while let Some(task) = self.queue.pop_first() {
            let (deg, kind, i, j) = task;
            self.check_cap(deg)?;
            let s = if kind == 0 {
                std::mem::replace(&mut self.inputs[i], Polynomial::zero(0, Field::Rational, self.ord))
            } else {
                self.spoly(i, j)
            };
            let h = reduce(&s, &self.basis, false);
            if !h.is_zero() {
                self.insert(h)?;
            }
        }
        Ok(())
    }

    fn finish(self, nvars: usize, field: Field) -> GroebnerBasis {
        let mut kept: Vec<Reducer> = self
            .basis
            .into_iter()
            .zip(self.active)
            .filter_map(|(r, a)| a.then_some(r))
            .collect();
        kept.sort_by(|a, b| self.ord.cmp(&a.lead, &b.lead));
        let reducers = kept.clone();
        let polys = kept
            .into_iter()
            .map(|r| {
                let mut terms = r.poly.into_terms();
                let head = terms.remove(0);
                let tail = Polynomial::from_sorted_terms(nvars, field, self.ord, terms);
                let tail = reduce(&tail, &reducers, false);
                let head = Polynomial::monomial(nvars, field, self.ord, head.0, head.1);
                &head + &tail
            })
            .collect();
        GroebnerBasis::from_reduced(nvars, field, self.ord, polys)
    }
}

fn start(nvars: usize, field: Field, ord: MonomialOrder, cap: u32, gens: &[Polynomial]) -> Result<State> {
    let mut inputs = Vec::new();
    let mut queue = BTreeSet::new();
    for g in gens {
        if g.nvars() != nvars || g.field() != field {
            return Err(Error::RingMismatch(format!(
                "generator over {} variables / {} in a ring of {} variables / {}",
                g.nvars(),
                g.field().descriptor(),
                nvars,
                field.descriptor()
            )));
        }
        if g.is_zero() {
            continue;
        }
        let g = g.with_order(ord);
        queue.insert((g.total_degree().unwrap(), 0, inputs.len(), 0));
        inputs.push(g);
    }
    Ok(State {
        ord,
        cap,
        basis: Vec::new(),
        active: Vec::new(),
        queue,
        inputs,
    })
}

/// Reduced monic Groebner basis of the ideal generated by `gens`.
pub fn buchberger(nvars: usize, field: Field, gens: &[Polynomial], ord: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_capped(nvars, field, gens, ord, DEFAULT_DEGREE_CAP)
}

pub fn buchberger_capped(
    nvars: usize,
    field: Field,
    gens: &[Polynomial],
    ord: MonomialOrder,
    cap: u32,
) -> Result<GroebnerBasis> {
    let mut st = start(nvars, field, ord, cap, gens)?;
    st.run()?;
    Ok(st.finish(nvars, field))
}

/// Groebner basis of `base + (extra)`, reusing the fact that `base` is
/// already a Groebner basis (no pairs among its elements are formed).
pub fn buchberger_extend(base: &GroebnerBasis, extra: &[Polynomial], cap: u32) -> Result<GroebnerBasis> {
    let (nvars, field, ord) = (base.nvars(), base.field(), base.order());
    let mut st = start(nvars, field, ord, cap, extra)?;
    for p in base.polys() {
        st.basis.push(Reducer::new(p.clone()));
        st.active.push(true);
    }
    // inputs already fully reduced against base are common; drop zeros early
    let reducers = st.basis.clone();
    let mut queue = BTreeSet::new();
    for (k, g) in st.inputs.iter_mut().enumerate() {
        let h = reduce(g, &reducers, false);
        if !h.is_zero() {
            queue.insert((h.total_degree().unwrap(), 0, k, 0));
        }
        *g = h;
    }
    st.queue = queue;
    st.run()?;
    Ok(st.finish(nvars, field))
}
