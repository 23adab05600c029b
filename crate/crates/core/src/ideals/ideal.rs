use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_extend, eliminate_polys, normal_form, normal_forms, GroebnerBasis};
use crate::linalg::{kernel, SparseVec};
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial};

use super::ring::RingPresentation;

/// Finitely generated ideal of `A`, stored through its lift to `D`.
#[derive(Clone)]
pub struct IdealHandle {
    ring: RingPresentation,
    gens: Vec<Polynomial>,
    gb: Arc<OnceLock<GroebnerBasis>>,
    nilpotency: Arc<OnceLock<Option<Vec<u32>>>>,
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gen_strings().join(", "))
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Combine<'a> {
    Sum(&'a IdealHandle),
    Product(&'a IdealHandle),
    Power(i64),
}

impl IdealHandle {
    pub fn new(ring: RingPresentation, gens: Vec<Polynomial>) -> Self {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.with_order(MonomialOrder::GrevLex))
            .collect();
        IdealHandle {
            ring,
            gens,
            gb: Arc::new(OnceLock::new()),
            nilpotency: Arc::new(OnceLock::new()),
        }
    }

    fn with_gb(ring: RingPresentation, gens: Vec<Polynomial>, gb: GroebnerBasis) -> Self {
        let h = IdealHandle::new(ring, gens);
        let _ = h.gb.set(gb);
        h
    }

    /// Handle whose generators are the part of `gb` outside 𝔞.
    fn from_gb(ring: &RingPresentation, gb: GroebnerBasis) -> Result<Self> {
        let gens = effective(ring, &gb)?;
        Ok(IdealHandle::with_gb(ring.clone(), gens, gb))
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gen_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.format(self.ring.names())).collect()
    }

    /// Reduced grevlex basis of `gens + 𝔞`.
    pub fn gb(&self) -> Result<&GroebnerBasis> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let base = self.ring.relation_gb()?;
        let g = buchberger_extend(base, &self.gens, self.ring.degree_cap())?;
        let _ = self.gb.set(g);
        Ok(self.gb.get().unwrap())
    }

    /// Generators reduced modulo 𝔞 that are not already zero in `A`.
    pub fn nonzero_gens(&self) -> Result<Vec<Polynomial>> {
        let rel = self.ring.relation_gb()?;
        Ok(normal_forms(&self.gens, rel)?
            .into_iter()
            .filter(|g| !g.is_zero())
            .collect())
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.nonzero_gens()?.is_empty())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    /// Least `k_i` with `x_i^k_i ∈ gens + 𝔞` for every variable, or `None`
    /// when some variable is not nilpotent modulo the lifted ideal.
    pub fn nilpotency_indices(&self) -> Result<Option<Vec<u32>>> {
        if let Some(v) = self.nilpotency.get() {
            return Ok(v.clone());
        }
        let gb = self.gb()?;
        let v = match gb.standard_monomials() {
            None => None,
            Some(std) => {
                // a nilpotent element of an algebra of dimension L has x^L = 0
                let dim = std.len() as u32;
                let ring = &self.ring;
                let mut out = Some(Vec::with_capacity(ring.nvars()));
                for i in 0..ring.nvars() {
                    let x = ring.var(i);
                    let mut p = normal_form(&x, gb)?;
                    let mut k = 1;
                    while !p.is_zero() && k <= dim {
                        p = normal_form(&(&p * &x), gb)?;
                        k += 1;
                    }
                    if !p.is_zero() {
                        out = None;
                        break;
                    }
                    out.as_mut().unwrap().push(k);
                }
                out
            }
        };
        let _ = self.nilpotency.set(v);
        Ok(self.nilpotency.get().unwrap().clone())
    }

    /// Whether `gens + 𝔞` contains a power of every variable of `D`, i.e. the
    /// polynomial quotient is itself the local Artinian ring.
    pub fn is_primary_in_ambient(&self) -> Result<bool> {
        Ok(self.nilpotency_indices()?.is_some())
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        self.gb()?.contains(f)
    }

    pub fn sum(&self, o: &IdealHandle) -> Result<IdealHandle> {
        ideal_combine(Combine::Sum(o), self)
    }

    pub fn product(&self, o: &IdealHandle) -> Result<IdealHandle> {
        ideal_combine(Combine::Product(o), self)
    }

    pub fn power(&self, k: usize) -> Result<IdealHandle> {
        ideal_combine(Combine::Power(k as i64), self)
    }

    /// Shortest generator list available for multiplying by this ideal.
    fn multiplier_gens(&self) -> Result<Vec<Polynomial>> {
        let own = self.nonzero_gens()?;
        let eff = effective(&self.ring, self.gb()?)?;
        Ok(if eff.len() < own.len() { eff } else { own })
    }
}

fn effective(ring: &RingPresentation, gb: &GroebnerBasis) -> Result<Vec<Polynomial>> {
    let rel = ring.relation_gb()?;
    Ok(gb
        .polys()
        .iter()
        .zip(normal_forms(gb.polys(), rel)?)
        .filter(|(_, nf)| !nf.is_zero())
        .map(|(p, _)| p.clone())
        .collect())
}

fn products(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for f in a {
        for g in b {
            let p = f * g;
            if !p.is_zero() && seen.insert(p.clone()) {
                out.push(p);
            }
        }
    }
    out
}

/// Sum, product or power of ideals.
pub fn ideal_combine(op: Combine<'_>, j: &IdealHandle) -> Result<IdealHandle> {
    let ring = &j.ring;
    match op {
        Combine::Sum(k) => {
            ring.same_ring(&k.ring)?;
            let mut gens = j.gens.clone();
            gens.extend(k.gens.iter().cloned());
            Ok(ring.ideal(gens))
        }
        Combine::Product(k) => {
            ring.same_ring(&k.ring)?;
            Ok(ring.ideal(products(&j.gens, &k.gens)))
        }
        Combine::Power(k) if k < 0 => Err(Error::NegativeExponent(k)),
        Combine::Power(0) => Ok(ring.unit_ideal()),
        Combine::Power(k) => {
            let k = k as usize;
            let key = j.gb()?.clone();
            let mut known = ring.cached_powers(&key);
            if known.is_empty() {
                ring.store_power(&key, 1, key.clone());
                known.push(key.clone());
            }
            let mult = j.multiplier_gens()?;
            let rel = ring.relation_gb()?;
            while known.len() < k {
                let prev = known.last().unwrap();
                let gens = products(&effective(ring, prev)?, &mult);
                let next = buchberger_extend(rel, &gens, ring.degree_cap())?;
                ring.store_power(&key, known.len() + 1, next.clone());
                known.push(next);
            }
            IdealHandle::from_gb(ring, known[k - 1].clone())
        }
    }
}

pub fn ideal_contains(j: &IdealHandle, k: &IdealHandle) -> Result<bool> {
    j.ring.same_ring(&k.ring)?;
    let g = j.gb()?;
    Ok(normal_forms(&k.gens, g)?.iter().all(|r| r.is_zero()))
}

/// First generator of `k` outside `j`, if any.
pub fn containment_witness(j: &IdealHandle, k: &IdealHandle) -> Result<Option<Polynomial>> {
    j.ring.same_ring(&k.ring)?;
    let g = j.gb()?;
    Ok(k.gens
        .iter()
        .zip(normal_forms(&k.gens, g)?)
        .find(|(_, r)| !r.is_zero())
        .map(|(f, _)| f.clone()))
}

pub fn ideal_equal(j: &IdealHandle, k: &IdealHandle) -> Result<bool> {
    j.ring.same_ring(&k.ring)?;
    Ok(j.gb()? == k.gb()?)
}

/// Standard-monomial basis of `D/J` with an index lookup.
struct Basis {
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Basis {
    fn of(gb: &GroebnerBasis) -> Option<Basis> {
        let monos = gb.standard_monomials()?;
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Some(Basis { monos, index })
    }

    fn coords(&self, f: &Polynomial, offset: usize, out: &mut SparseVec) {
        for (m, c) in f.terms() {
            out.push((offset + self.index[m], c.clone()));
        }
    }

    fn poly(&self, v: &SparseVec, nvars: usize, field: Field) -> Polynomial {
        let terms = v.iter().map(|(i, c)| (self.monos[*i].clone(), c.clone())).collect();
        Polynomial::from_terms(nvars, field, MonomialOrder::GrevLex, terms)
    }
}

/// Lifts of a basis of `(J : (fs)) / J` for Artinian `D/J`.
fn colon_kernel(jgb: &GroebnerBasis, basis: &Basis, fs: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let n = basis.monos.len();
    let (nvars, field) = (jgb.nvars(), jgb.field());
    let mut prods = Vec::with_capacity(n * fs.len());
    for b in &basis.monos {
        for f in fs {
            prods.push(f.mul_term(b, &field.one()));
        }
    }
    let nfs = normal_forms(&prods, jgb)?;
    let columns: Vec<SparseVec> = (0..n)
        .map(|j| {
            let mut col = Vec::new();
            for (i, nf) in nfs[j * fs.len()..(j + 1) * fs.len()].iter().enumerate() {
                basis.coords(nf, i * n, &mut col);
            }
            col.sort_by_key(|e| e.0);
            col
        })
        .collect();
    Ok(kernel(&columns, field)
        .iter()
        .map(|v| basis.poly(v, nvars, field))
        .collect())
}

/// `(J : (fs))` as a lifted basis, for `J` Artinian in `D`.
fn colon_artinian(ring: &RingPresentation, jgb: &GroebnerBasis, fs: &[Polynomial]) -> Result<GroebnerBasis> {
    let basis = Basis::of(jgb).expect("artinian");
    let ker = colon_kernel(jgb, &basis, fs)?;
    if ker.is_empty() {
        return Ok(jgb.clone());
    }
    buchberger_extend(jgb, &ker, ring.degree_cap())
}

/// `(a) ∩ K` for `K` Artinian in `D` (lifted, containing 𝔞).
fn intersect_artinian(
    ring: &RingPresentation,
    a: &[Polynomial],
    kgb: &GroebnerBasis,
) -> Result<GroebnerBasis> {
    let (nvars, field) = (ring.nvars(), ring.field());
    let kbasis = Basis::of(kgb).expect("artinian");
    let mut gens = Vec::new();
    let mut columns: Vec<SparseVec> = Vec::new();
    let mut unknowns: Vec<Polynomial> = Vec::new();
    for ai in a {
        // a_i * (K : a_i) lies in K; the rest is a finite linear problem
        let ci = colon_artinian(ring, kgb, std::slice::from_ref(ai))?;
        for g in effective(ring, &ci)? {
            gens.push(&g * ai);
        }
        let cb = ci.standard_monomials().expect("artinian");
        let prods: Vec<Polynomial> = cb.iter().map(|b| ai.mul_term(b, &field.one())).collect();
        for (p, nf) in prods.iter().zip(normal_forms(&prods, kgb)?) {
            let mut col = Vec::new();
            kbasis.coords(&nf, 0, &mut col);
            col.sort_by_key(|e| e.0);
            columns.push(col);
            unknowns.push(p.clone());
        }
    }
    for v in kernel(&columns, field) {
        let terms: Vec<(Monomial, _)> = Vec::new();
        let mut acc = Polynomial::from_terms(nvars, field, MonomialOrder::GrevLex, terms);
        for (i, c) in &v {
            acc = &acc + &unknowns[*i].scale(c);
        }
        if !acc.is_zero() {
            gens.push(acc);
        }
    }
    buchberger_extend(ring.relation_gb()?, &gens, ring.degree_cap())
}

/// `(a) ∩ (b)` in `D` via `t*(a) + (1-t)*(b)`, eliminating `t`.
fn intersect_elim(nvars: usize, field: Field, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let ord = MonomialOrder::Elimination(1);
    let t = Polynomial::var(nvars + 1, field, ord, 0);
    let one_minus_t = &Polynomial::one(nvars + 1, field, ord) - &t;
    let mut gens = Vec::new();
    for f in a {
        gens.push(&f.prepend_var(0, ord) * &t);
    }
    for g in b {
        gens.push(&g.prepend_var(0, ord) * &one_minus_t);
    }
    Ok(eliminate_polys(nvars + 1, field, &gens, &[0], MonomialOrder::GrevLex)?
        .into_iter()
        .map(|p| p.drop_front_vars(1, MonomialOrder::GrevLex))
        .collect())
}

/// Generic intersection route (elimination), independent of the Artinian shortcut.
pub fn ideal_intersect_elim(j: &IdealHandle, k: &IdealHandle) -> Result<IdealHandle> {
    j.ring.same_ring(&k.ring)?;
    let ring = &j.ring;
    let mut a = j.gens.clone();
    a.extend(ring.relations().iter().cloned());
    let mut b = k.gens.clone();
    b.extend(ring.relations().iter().cloned());
    let gens = intersect_elim(ring.nvars(), ring.field(), &a, &b)?;
    Ok(ring.ideal(gens))
}

/// `J ∩ K` in `A`.
pub fn ideal_intersect(j: &IdealHandle, k: &IdealHandle) -> Result<IdealHandle> {
    j.ring.same_ring(&k.ring)?;
    let ring = &j.ring;
    if k.is_primary_in_ambient()? {
        return IdealHandle::from_gb(ring, intersect_artinian(ring, &j.gens, k.gb()?)?);
    }
    if j.is_primary_in_ambient()? {
        return IdealHandle::from_gb(ring, intersect_artinian(ring, &k.gens, j.gb()?)?);
    }
    ideal_intersect_elim(j, k)
}

/// Generic colon route: intersect with `(f)` in `D` and divide by `f`.
pub fn ideal_colon_elim(j: &IdealHandle, k: &IdealHandle) -> Result<IdealHandle> {
    j.ring.same_ring(&k.ring)?;
    let ring = &j.ring;
    let fs = k.nonzero_gens()?;
    if fs.is_empty() {
        return Err(Error::ZeroDivisorIdeal);
    }
    let mut lifted = j.gens.clone();
    lifted.extend(ring.relations().iter().cloned());
    let mut acc: Option<IdealHandle> = None;
    for f in &fs {
        let meet = intersect_elim(ring.nvars(), ring.field(), &lifted, std::slice::from_ref(f))?;
        let quot = meet
            .iter()
            .map(|g| g.div_exact(f).expect("element of (f) is divisible by f"))
            .collect();
        let c = ring.ideal(quot);
        acc = Some(match acc {
            None => c,
            Some(prev) => ideal_intersect_elim(&prev, &c)?,
        });
    }
    Ok(acc.unwrap())
}

/// `(J :_A K)`.
pub fn ideal_colon(j: &IdealHandle, k: &IdealHandle) -> Result<IdealHandle> {
    j.ring.same_ring(&k.ring)?;
    let ring = &j.ring;
    let fs = k.nonzero_gens()?;
    if fs.is_empty() {
        return Err(Error::ZeroDivisorIdeal);
    }
    if j.is_primary_in_ambient()? {
        return IdealHandle::from_gb(ring, colon_artinian(ring, j.gb()?, &fs)?);
    }
    ideal_colon_elim(j, k)
}

/// `J ∩ k[remaining variables]`, with 𝔞 included.
pub fn eliminate(j: &IdealHandle, drop: &[usize]) -> Result<IdealHandle> {
    let ring = &j.ring;
    let mut gens = j.gens.clone();
    gens.extend(ring.relations().iter().cloned());
    let out = eliminate_polys(ring.nvars(), ring.field(), &gens, drop, MonomialOrder::GrevLex)?;
    Ok(ring.ideal(out))
}
