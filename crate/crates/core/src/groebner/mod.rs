//! Buchberger's algorithm, normal forms and elimination.

mod buchberger;
mod elim;
mod reduce;

pub use buchberger::{buchberger, buchberger_capped, buchberger_extend, DEFAULT_DEGREE_CAP};
pub use elim::eliminate_polys;

use crate::error::{Error, Result};
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial};
use reduce::Reducer;

/// Reduced monic Groebner basis, elements sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroebnerBasis {
    nvars: usize,
    field: Field,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub(crate) fn from_reduced(nvars: usize, field: Field, order: MonomialOrder, polys: Vec<Polynomial>) -> Self {
        GroebnerBasis {
            nvars,
            field,
            order,
            polys,
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

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].lm().is_some_and(|m| m.is_one())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.lm().unwrap().clone()).collect()
    }

    pub(crate) fn reducers(&self) -> Vec<Reducer> {
        self.polys.iter().cloned().map(Reducer::new).collect()
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if f.nvars() != self.nvars || f.field() != self.field {
            return Err(Error::RingMismatch(format!(
                "polynomial over {} variables / {} against a basis over {} variables / {}",
                f.nvars(),
                f.field().descriptor(),
                self.nvars,
                self.field.descriptor()
            )));
        }
        Ok(())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    /// Smallest k with `x_i^k` a leading monomial, for each variable; `None`
    /// if some variable has no pure power among the leads.
    pub fn pure_power_bounds(&self) -> Option<Vec<u16>> {
        let mut bounds = vec![None; self.nvars];
        for m in self.leading_monomials() {
            let e = m.exponents();
            let nz: Vec<usize> = (0..self.nvars).filter(|&i| e[i] > 0).collect();
            match nz.as_slice() {
                [] => return Some(vec![0; self.nvars]),
                [i] => {
                    let b = bounds[*i].get_or_insert(e[*i]);
                    *b = (*b).min(e[*i]);
                }
                _ => {}
            }
        }
        bounds.into_iter().collect()
    }

    /// Monomials outside the leading-term ideal; `None` if there are
    /// infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let bounds = self.pure_power_bounds()?;
        let leads = self.leading_monomials();
        let masks: Vec<u64> = leads.iter().map(|m| m.mask()).collect();
        let mut out = Vec::new();
        let mut exps = vec![0u16; self.nvars];
        if self.is_unit() {
            return Some(out);
        }
        // depth-first walk; divisibility is monotone so dead branches stop
        fn walk(
            i: usize,
            exps: &mut Vec<u16>,
            bounds: &[u16],
            leads: &[Monomial],
            masks: &[u64],
            out: &mut Vec<Monomial>,
        ) {
            if i == exps.len() {
                out.push(Monomial::from_exponents(exps));
                return;
            }
            for e in 0..bounds[i] {
                exps[i] = e;
                let m = Monomial::from_exponents(exps);
                let mm = m.mask();
                let dead = leads
                    .iter()
                    .zip(masks)
                    .any(|(l, &lm)| lm & !mm == 0 && l.divides(&m));
                if dead {
                    break;
                }
                walk(i + 1, exps, bounds, leads, masks, out);
            }
            exps[i] = 0;
        }
        walk(0, &mut exps, &bounds, &leads, &masks, &mut out);
        Some(out)
    }

    /// Same ideal under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<GroebnerBasis> {
        if order == self.order {
            return Ok(self.clone());
        }
        buchberger(self.nvars, self.field, &self.polys, order)
    }
}

/// Remainder of `f` on division by `g`; zero iff `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    g.check(f)?;
    let f = f.with_order(g.order);
    Ok(reduce::reduce(&f, &g.reducers(), false))
}

/// Normal forms against one basis, reusing the reducer table.
pub fn normal_forms(fs: &[Polynomial], g: &GroebnerBasis) -> Result<Vec<Polynomial>> {
    let reducers = g.reducers();
    fs.iter()
        .map(|f| {
            g.check(f)?;
            Ok(reduce::reduce(&f.with_order(g.order), &reducers, false))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    fn ps(src: &[&str], vars: &[&str], ord: MonomialOrder) -> Vec<Polynomial> {
        src.iter()
            .map(|s| parse_polynomial(s, &names(vars), Field::Rational, ord).unwrap())
            .collect()
    }

    fn gb(src: &[&str], vars: &[&str], ord: MonomialOrder) -> GroebnerBasis {
        buchberger(vars.len(), Field::Rational, &ps(src, vars, ord), ord).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let g = MonomialOrder::GrevLex;
        let v = ["x", "y"];
        let b = gb(&["x^2 - y"], &v, g);
        let nf = |s: &str, b: &GroebnerBasis| normal_form(&ps(&[s], &v, g)[0], b).unwrap().format(&names(&v));
        assert_eq!(nf("x^2", &b), "y");
        assert_eq!(nf("x^2*y^2", &b), "y^3");
        let b2 = gb(&["x^2", "y^2"], &v, g);
        assert_eq!(nf("x*y", &b2), "x*y");
    }

    #[test]
    fn basic_bases() {
        let g = MonomialOrder::GrevLex;
        let v = ["x", "y"];
        assert_eq!(gb(&["x", "y"], &v, g).polys(), ps(&["y", "x"], &v, g).as_slice());
        assert_eq!(gb(&["7*x"], &v, g).polys(), ps(&["x"], &v, g).as_slice());
        assert!(buchberger(2, Field::Rational, &[], g).unwrap().is_empty());
        assert!(gb(&["x + 1", "x"], &v, g).is_unit());
    }

    #[test]
    fn twisted_cubic() {
        let lex = MonomialOrder::Lex;
        let v = ["x", "y", "z"];
        let b = gb(&["x^2 - y", "x^3 - z"], &v, lex);
        let target = ps(&["y^3 - z^2"], &v, lex).remove(0);
        assert!(b.polys().contains(&target));
        // every S-pair reduces to zero
        for (i, f) in b.polys().iter().enumerate() {
            for g in &b.polys()[i + 1..] {
                let l = f.lm().unwrap().lcm(g.lm().unwrap());
                let s = &f.mul_term(&f.lm().unwrap().quotient_of(&l), &Field::Rational.one())
                    - &g.mul_term(&g.lm().unwrap().quotient_of(&l), &Field::Rational.one());
                assert!(normal_form(&s, &b).unwrap().is_zero());
            }
        }
        // y^3 - z^2 vanishes on (t, t^2, t^3)
        let t = Polynomial::var(1, Field::Rational, lex, 0);
        let img = target.substitute(&[t.clone(), t.pow(2), t.pow(3)]);
        assert!(img.is_zero());
    }

    #[test]
    fn standard_monomials_count() {
        let g = MonomialOrder::GrevLex;
        let v = ["x", "y"];
        assert_eq!(gb(&["x^2", "x*y", "y^2"], &v, g).standard_monomials().unwrap().len(), 3);
        // 1, x, x^2, y, x*y, x^2*y, y^2, y^3
        assert_eq!(gb(&["x^3", "x*y^2", "y^4"], &v, g).standard_monomials().unwrap().len(), 8);
        assert!(gb(&["x^2"], &v, g).standard_monomials().is_none());
    }

    #[test]
    fn extension_matches_scratch() {
        let g = MonomialOrder::GrevLex;
        let v = ["x", "y", "z"];
        let base = gb(&["x^2 - y*z", "y^3 - x*z"], &v, g);
        let extra = ps(&["z^2 - x", "x*y*z"], &v, g);
        let ext = buchberger_extend(&base, &extra, DEFAULT_DEGREE_CAP).unwrap();
        let all = gb(&["x^2 - y*z", "y^3 - x*z", "z^2 - x", "x*y*z"], &v, g);
        assert_eq!(ext, all);
    }

    #[test]
    fn degree_cap_fires() {
        let g = MonomialOrder::GrevLex;
        let v = ["x", "y"];
        let gens = ps(&["x^3 - y^2", "x*y^3 - 1"], &v, g);
        let r = buchberger_capped(2, Field::Rational, &gens, g, 4);
        assert!(matches!(r, Err(Error::DegreeCap { cap: 4, .. })));
    }
}
