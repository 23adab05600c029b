use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger_extend, normal_forms, GroebnerBasis};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

use super::ideal::{containment_witness, IdealHandle};
use super::ring::RingPresentation;

/// Highest truncation degree tried when `J + 𝔞` has components away from the origin.
pub const TRUNCATION_CAP: u32 = 40;

/// A certified length: `value` was obtained at truncation `truncation` and
/// agrees with the value at `witness = truncation + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LengthValue {
    pub value: u64,
    pub truncation: u32,
    pub witness: u32,
}

fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(Monomial::from_exponents(cur));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    rec(0, deg, &mut vec![0; nvars], &mut out);
    out
}

/// GB of `J + M^n` given the GB of `J`; monomials already in `J` are skipped.
pub(crate) fn truncate(ring: &RingPresentation, gb: &GroebnerBasis, n: u32) -> Result<GroebnerBasis> {
    let monos: Vec<Polynomial> = monomials_of_degree(ring.nvars(), n)
        .into_iter()
        .map(|m| Polynomial::monomial(ring.nvars(), ring.field(), MonomialOrder::GrevLex, m, ring.field().one()))
        .collect();
    let extra: Vec<Polynomial> = normal_forms(&monos, gb)?
        .into_iter()
        .zip(monos)
        .filter(|(nf, _)| !nf.is_zero())
        .map(|(_, m)| m)
        .collect();
    if extra.is_empty() {
        return Ok(gb.clone());
    }
    buchberger_extend(gb, &extra, ring.degree_cap())
}

fn count(gb: &GroebnerBasis) -> u64 {
    gb.standard_monomials().expect("artinian").len() as u64
}

/// `ℓ(A/J)`.
///
/// When every variable has a pure power in `J + 𝔞`, the polynomial quotient is
/// already local and `M^s ⊆ J + 𝔞` for `s = Σ(k_i - 1) + 1`, so every
/// truncation `N ≥ s` gives the same count. Otherwise truncations are tried
/// until `J + 𝔞 + M^N = J + 𝔞 + M^(N+1)`, which by Nakayama puts `M^N`
/// inside `J` locally.
pub fn artinian_length(j: &IdealHandle) -> Result<LengthValue> {
    let ring = j.ring();
    let gb = j.gb()?;
    if gb.is_unit() {
        return Ok(LengthValue {
            value: 0,
            truncation: 0,
            witness: 1,
        });
    }
    if let Some(bounds) = j.nilpotency_indices()? {
        let s = bounds.iter().map(|&k| k - 1).sum::<u32>() + 1;
        return Ok(LengthValue {
            value: count(gb),
            truncation: s,
            witness: s + 1,
        });
    }
    let mut prev = None;
    for n in 1..=TRUNCATION_CAP.min(ring.degree_cap()) {
        let v = count(&truncate(ring, gb, n)?);
        if prev == Some(v) {
            return Ok(LengthValue {
                value: v,
                truncation: n - 1,
                witness: n,
            });
        }
        prev = Some(v);
    }
    let variable = first_non_nilpotent(j)?;
    Err(Error::NotZeroDimensional {
        variable,
        cap: TRUNCATION_CAP.min(ring.degree_cap()),
    })
}

fn first_non_nilpotent(j: &IdealHandle) -> Result<String> {
    let ring = j.ring();
    let gb = j.gb()?;
    let cap = TRUNCATION_CAP.min(ring.degree_cap());
    for i in 0..ring.nvars() {
        let x = ring.var(i);
        if !gb.contains(&x.pow(cap))? {
            return Ok(ring.names()[i].clone());
        }
    }
    Ok(String::new())
}

/// `ℓ(J/K)` for `K ⊆ J`.
pub fn quotient_length(j: &IdealHandle, k: &IdealHandle) -> Result<LengthValue> {
    if let Some(w) = containment_witness(j, k)? {
        return Err(Error::NotContained {
            witness: w.format(j.ring().names()),
        });
    }
    match (artinian_length(k), artinian_length(j)) {
        (Ok(lk), Ok(lj)) => Ok(LengthValue {
            value: lk.value - lj.value,
            truncation: lk.truncation.max(lj.truncation),
            witness: lk.witness.max(lj.witness),
        }),
        (Err(Error::NotZeroDimensional { .. }), _) | (_, Err(Error::NotZeroDimensional { .. })) => {
            truncated_difference(j, k)
        }
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

/// `ℓ(A/(K + M^N)) - ℓ(A/(J + M^N))` at the first `N` where it repeats.
fn truncated_difference(j: &IdealHandle, k: &IdealHandle) -> Result<LengthValue> {
    let ring = j.ring();
    let cap = TRUNCATION_CAP.min(ring.degree_cap());
    let mut prev = None;
    for n in 1..=cap {
        let a = count(&truncate(ring, k.gb()?, n)?);
        let b = count(&truncate(ring, j.gb()?, n)?);
        let v = a - b;
        if prev == Some(v) {
            return Ok(LengthValue {
                value: v,
                truncation: n - 1,
                witness: n,
            });
        }
        prev = Some(v);
    }
    Err(Error::NoStabilization { cap: cap as usize })
}

/// Brute-force staircase count for monomial ideals, no Groebner bases.
/// `exps` lists generator exponent vectors; the scan covers the box
/// `[0, truncation)^n` and is certified against `[0, truncation + 1)^n`.
pub fn monomial_length_oracle(nvars: usize, exps: &[Vec<u16>], truncation: u32) -> Result<LengthValue> {
    for (i, e) in exps.iter().enumerate() {
        if e.len() != nvars {
            return Err(Error::Input(format!("generator {i} has {} exponents, expected {nvars}", e.len())));
        }
    }
    for v in 0..nvars {
        let has_power = exps
            .iter()
            .any(|e| e[v] > 0 && e.iter().enumerate().all(|(k, &x)| k == v || x == 0));
        if !has_power {
            return Err(Error::NotZeroDimensional {
                variable: format!("x{}", v + 1),
                cap: truncation,
            });
        }
    }
    let scan = |bound: u32| -> u64 {
        let mut point = vec![0u16; nvars];
        let mut n = 0u64;
        loop {
            if !exps.iter().any(|g| g.iter().zip(&point).all(|(a, b)| a <= b)) {
                n += 1;
            }
            let mut i = 0;
            loop {
                if i == nvars {
                    return n;
                }
                point[i] += 1;
                if (point[i] as u32) < bound {
                    break;
                }
                point[i] = 0;
                i += 1;
            }
        }
    };
    let (a, b) = (scan(truncation), scan(truncation + 1));
    if a != b {
        return Err(Error::InsufficientWindow {
            index: truncation as usize,
        });
    }
    Ok(LengthValue {
        value: a,
        truncation,
        witness: truncation + 1,
    })
}

/// Exponent vectors of monomial generators; rejects anything else.
pub fn monomial_exponents(gens: &[Polynomial], names: &[String]) -> Result<Vec<Vec<u16>>> {
    gens.iter()
        .map(|g| {
            if !g.is_monomial() {
                return Err(Error::Input(format!("`{}` is not a monomial", g.format(names))));
            }
            Ok(g.terms()[0].0.exponents().to_vec())
        })
        .collect()
}
