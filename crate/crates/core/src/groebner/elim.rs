use super::buchberger;
use crate::error::{Error, Result};
use crate::poly::{Field, MonomialOrder, Polynomial};

/// Generators of `(gens) ∩ k[remaining variables]`, returned in the original
/// variable layout under `out_order`.
pub fn eliminate_polys(
    nvars: usize,
    field: Field,
    gens: &[Polynomial],
    drop: &[usize],
    out_order: MonomialOrder,
) -> Result<Vec<Polynomial>> {
    if let Some(&bad) = drop.iter().find(|&&v| v >= nvars) {
        return Err(Error::Input(format!("variable index {bad} out of range")));
    }
    let mut drop: Vec<usize> = drop.to_vec();
    drop.sort_unstable();
    drop.dedup();
    let k = drop.len();
    // dropped variables move to the front
    let mut perm = vec![0; nvars];
    let mut next = k;
    for v in 0..nvars {
        perm[v] = match drop.iter().position(|&d| d == v) {
            Some(p) => p,
            None => {
                next += 1;
                next - 1
            }
        };
    }
    let mut inv = vec![0; nvars];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let ord = MonomialOrder::Elimination(k);
    let moved: Vec<Polynomial> = gens.iter().map(|g| g.permute_vars(&perm, ord)).collect();
    let g = buchberger(nvars, field, &moved, ord)?;
    let front: Vec<usize> = (0..k).collect();
    Ok(g
        .polys()
        .iter()
        .filter(|p| !p.involves_any(&front))
        .map(|p| p.permute_vars(&inv, out_order))
        .collect())
}
