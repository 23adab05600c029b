use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::krull_dimension;
use crate::ideals::{
    artinian_length, containment_witness, ideal_equal, ideal_intersect, IdealHandle,
};

/// Reduction-number flags of a pair `Q ⊆ I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SallyFlags {
    pub q_cap_i2_eq_qi: bool,
    pub i2_eq_qi: bool,
    pub i3_eq_qi2: bool,
    pub i4_eq_qi3: bool,
}

/// Lengths of the graded pieces of `S`, `L` and `C` for `n = 1..=n_max`.
///
/// Entry `k` of each vector is the piece of degree `n = k + 1`; `C_1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SallyTable {
    pub dimension: usize,
    pub n_max: usize,
    /// `ℓ(A/I)`
    pub colength: u64,
    /// `ℓ(I^(n+1)/Q^n I)`
    pub s: Vec<u64>,
    /// `ℓ(Q^(n-1) I^2/Q^n I)`
    pub l: Vec<u64>,
    /// `ℓ(I^(n+1)/Q^(n-1) I^2)`
    pub c_lengths: Vec<u64>,
    /// `ℓ(I^3/QI^2)`
    pub c: u64,
    pub flags: SallyFlags,
    /// least `r` with `I^(r+1) = QI^r`
    pub reduction_number: usize,
}

impl SallyTable {
    /// `ℓ(I^2/QI)`
    pub fn lambda(&self) -> u64 {
        self.s[0]
    }

    pub fn s_at(&self, n: usize) -> u64 {
        if n == 0 { 0 } else { self.s[n - 1] }
    }

    pub fn l_at(&self, n: usize) -> u64 {
        if n == 0 { 0 } else { self.l[n - 1] }
    }

    pub fn c_at(&self, n: usize) -> u64 {
        if n <= 1 { 0 } else { self.c_lengths[n - 1] }
    }
}

fn check_pair(i: &IdealHandle, q: &IdealHandle) -> Result<usize> {
    i.ring().same_ring(q.ring())?;
    if let Some(w) = containment_witness(i, q)? {
        return Err(Error::NotContained {
            witness: w.format(i.ring().names()),
        });
    }
    let d = krull_dimension(i.ring())?;
    let k = q.nonzero_gens()?.len();
    if k != d {
        return Err(Error::Precondition(format!(
            "the reduction must have {d} generators, found {k}"
        )));
    }
    Ok(d)
}

/// Computes the table up to `max(n_max, 3)` and the reduction number.
pub fn sally_table(i: &IdealHandle, q: &IdealHandle, n_max: usize) -> Result<SallyTable> {
    let dimension = check_pair(i, q)?;
    let top = n_max.max(3);
    let colength = artinian_length(i)?.value;

    // ℓ(A/I^(n+1)), ℓ(A/Q^n I), ℓ(A/Q^(n-1) I^2), ℓ(A/QI^n) for n = 1..=top
    let mut powers = Vec::with_capacity(top);
    let mut q_in = Vec::with_capacity(top);
    let mut qn_i = Vec::with_capacity(top);
    let mut qn1_i2 = Vec::with_capacity(top);
    let i2 = i.power(2)?;
    let mut a = i.clone();
    let mut b = i2.clone();
    for n in 1..=top {
        a = q.product(&a)?;
        if n > 1 {
            b = q.product(&b)?;
        }
        powers.push(artinian_length(&i.power(n + 1)?)?.value);
        qn_i.push(artinian_length(&a)?.value);
        qn1_i2.push(artinian_length(&b)?.value);
        q_in.push(artinian_length(&q.product(&i.power(n)?)?)?.value);
    }
    let reduced = |n: usize| q_in[n - 1] == powers[n - 1];

    let s: Vec<u64> = (0..top).map(|k| qn_i[k] - powers[k]).collect();
    let l: Vec<u64> = (0..top).map(|k| qn_i[k] - qn1_i2[k]).collect();
    let c_lengths: Vec<u64> = (0..top).map(|k| qn1_i2[k] - powers[k]).collect();

    let reduction_number = if artinian_length(q)?.value == colength {
        0
    } else {
        match (1..=n_max).find(|&r| reduced(r)) {
            Some(r) => r,
            None => return Err(Error::NotAReduction { checked: n_max }),
        }
    };

    let flags = SallyFlags {
        q_cap_i2_eq_qi: check_q_cap_i2(i, q)?,
        i2_eq_qi: reduced(1),
        i3_eq_qi2: reduced(2),
        i4_eq_qi3: reduced(3),
    };
    Ok(SallyTable {
        dimension,
        n_max,
        colength,
        c: c_lengths[1],
        s: s[..n_max.max(1)].to_vec(),
        l: l[..n_max.max(1)].to_vec(),
        c_lengths: c_lengths[..n_max.max(1)].to_vec(),
        flags,
        reduction_number,
    })
}

/// `Q ∩ I^2 = QI`.
pub fn check_q_cap_i2(i: &IdealHandle, q: &IdealHandle) -> Result<bool> {
    let qi = q.product(i)?;
    ideal_equal(&ideal_intersect(q, &i.power(2)?)?, &qi)
}

/// `ℓ(I^(n+1)/Q^(n-i+1) I^i)` for `n = i..=n_max`.
pub fn vaz_pinto_lengths(i: &IdealHandle, q: &IdealHandle, index: usize, n_max: usize) -> Result<Vec<u64>> {
    check_pair(i, q)?;
    if index == 0 {
        return Err(Error::Input("filtration index must be at least 1".into()));
    }
    let mut b = i.power(index)?;
    let mut out = Vec::new();
    for n in index..=n_max {
        b = q.product(&b)?;
        let full = artinian_length(&i.power(n + 1)?)?.value;
        out.push(artinian_length(&b)?.value - full);
    }
    Ok(out)
}
