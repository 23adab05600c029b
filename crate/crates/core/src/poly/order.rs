use std::cmp::Ordering;

use super::monomial::Monomial;

/// Term orders. `Elimination(k)` compares the first `k` variables
/// lexicographically and breaks ties with grevlex on the remaining ones,
/// so it eliminates the first block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    Elimination(usize),
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    grevlex_with_degrees(a, da, b, db)
}

fn grevlex_with_degrees(a: &[u16], da: u32, b: &[u16], db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable wins
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => lex(ea, eb),
            MonomialOrder::GrevLex => grevlex_with_degrees(ea, a.degree(), eb, b.degree()),
            MonomialOrder::Elimination(k) => {
                let k = k.min(ea.len());
                match lex(&ea[..k], &eb[..k]) {
                    Ordering::Equal => grevlex(&ea[k..], &eb[k..]),
                    o => o,
                }
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Elimination(k) => format!("elim({k})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_rules() {
        let o = MonomialOrder::GrevLex;
        // y^3 > x^2 by degree
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // x^2 y > x y^2
        assert_eq!(o.cmp(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        // classic grevlex vs deglex split: x y z^0... x^1 z^2 < y^3? same degree 3
        assert_eq!(o.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn lex_and_elimination() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        let e = MonomialOrder::Elimination(1);
        assert_eq!(e.cmp(&m(&[1, 0, 0]), &m(&[0, 7, 7])), Ordering::Greater);
        assert_eq!(e.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }
}
