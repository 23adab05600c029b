//! One line per acceptance criterion; exits nonzero if any criterion fails.

use hilbert_sally::cli::{build_family, FamilySpec};
use hilbert_sally::hilbert::{binom, hilbert_data, HilbertData};
use hilbert_sally::ideals::{
    artinian_length, monomial_length_oracle, quotient_length, IdealHandle, RingPresentation,
};
use hilbert_sally::poly::{Field, Monomial, MonomialOrder, Polynomial};
use hilbert_sally::sally::{
    classify_with, decomposition_with, depth_probe, ratliff_rush, sally_table, Branch,
    ClassificationReport, RankOneCase, SallyTable, DEFAULT_RR_CAP,
};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

struct Case {
    label: String,
    m: usize,
    d: usize,
    c: usize,
    i: IdealHandle,
    q: IdealHandle,
    data: HilbertData,
    table: SallyTable,
    class: ClassificationReport,
}

fn analyse(label: String, i: IdealHandle, q: IdealHandle, (m, d, c): (usize, usize, usize)) -> Case {
    let data = hilbert_data(&i, 8).unwrap();
    let table = sally_table(&i, &q, 8).unwrap();
    let class = classify_with(&i, &table, &data).unwrap();
    Case { label, m, d, c, i, q, data, table, class }
}

fn family(m: usize, d: usize, c: usize) -> Case {
    let doc = build_family(FamilySpec::new(m, d, Some(c)).unwrap(), Field::Rational);
    let loaded = doc.load().unwrap();
    let (i, q) = (loaded.ideal("I").unwrap().clone(), loaded.ideal("Q").unwrap().clone());
    analyse(format!("family({m},{d},{c})"), i, q, (m, d, c))
}

fn fixture(label: &str, names: &[&str], relations: &[&str], i: &[&str], q: &[&str]) -> Case {
    let r = RingPresentation::parse(Field::Rational, names, relations).unwrap();
    let (i, q) = (r.ideal_from_strs(i).unwrap(), r.ideal_from_strs(q).unwrap());
    analyse(label.to_string(), i, q, (0, 0, 0))
}

struct Outcome {
    ok: bool,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, failures: Vec::new() }
    }

    fn check(&mut self, cond: bool, what: impl FnOnce() -> String) {
        if !cond {
            self.ok = false;
            self.failures.push(what());
        }
    }
}

fn report(n: usize, title: &str, o: &Outcome, all: &mut bool) {
    let status = if o.ok { "PASS" } else { "FAIL" };
    println!("criterion {n} [{status}] {title}");
    for f in &o.failures {
        println!("    {f}");
    }
    *all &= o.ok;
}

fn expected_numerator(m: usize, d: usize) -> Vec<i64> {
    let mut h = vec![1, (m + d + 1) as i64, 0];
    for j in 3..=d as i64 + 2 {
        h.push(if j % 2 == 1 { 1 } else { -1 } * binom(d as i64 + 1, j - 1));
    }
    while h.last() == Some(&0) {
        h.pop();
    }
    h
}

/// Dimension of the degree `n - 1` part of `(X_1..X_c)` in `k[X_1..X_d]`, by counting monomials.
fn c_length_by_count(n: usize, d: usize, c: usize) -> i64 {
    if n < 2 {
        return 0;
    }
    fn count(vars: usize, deg: usize, c: usize, seen_low: bool) -> i64 {
        if vars == 0 {
            return (deg == 0 && seen_low) as i64;
        }
        let idx_low = vars <= c;
        (0..=deg).map(|e| count(vars - 1, deg - e, c, seen_low || (idx_low && e > 0))).sum()
    }
    count(d, n - 1, c, false)
}

fn main() {
    let started = std::time::Instant::now();
    let grid: Vec<Case> = (0..=2)
        .flat_map(|m| (1..=3).map(move |d| (m, d)))
        .map(|(m, d)| family(m, d, d))
        .collect();
    let lower = vec![family(0, 2, 1), family(1, 3, 1), family(0, 3, 2)];
    let fixtures = vec![
        fixture("plane I=Q=m", &["x", "y"], &[], &["x", "y"], &["x", "y"]),
        fixture("plane I=m^2", &["x", "y"], &[], &["x^2", "x*y", "y^2"], &["x^2", "y^2"]),
        fixture("space I=Q=m", &["x", "y", "z"], &[], &["x", "y", "z"], &["x", "y", "z"]),
        fixture("plane (x^4,x^3y,xy^3,y^4)", &["x", "y"], &[], &["x^4", "x^3*y", "x*y^3", "y^4"], &["x^4", "y^4"]),
        fixture("cusp", &["x", "y"], &["y^2 - x^3"], &["x", "y"], &["x"]),
        fixture("cubic cone", &["x", "y", "z"], &["x^3 + y^3 + z^3"], &["x", "y", "z"], &["x", "y"]),
        fixture("A2 cone", &["x", "y", "z"], &["x*y - z^2"], &["x", "y", "z"], &["x", "y"]),
    ];
    let mut all = true;

    let mut o = Outcome::new();
    for k in &grid {
        let (m, d) = (k.m as i64, k.d as i64);
        let mut e = vec![m + 2 * d + 2, m + 3 * d + 2];
        if d >= 2 {
            e.push(d + 1);
        }
        e.resize(k.d + 1, 0);
        o.check(k.data.coefficients == e, || {
            format!("{}: e = {:?}, expected {:?}", k.label, k.data.coefficients, e)
        });
    }
    report(1, "family Hilbert coefficients e0 = m+2d+2, e1 = m+3d+2, e2 = d+1, e_i = 0 (9 cases)", &o, &mut all);

    let mut o = Outcome::new();
    for k in &grid {
        let h = expected_numerator(k.m, k.d);
        o.check(k.data.numerator == h, || format!("{}: h = {:?}, expected {:?}", k.label, k.data.numerator, h));
    }
    report(2, "family series numerators", &o, &mut all);

    let mut o = Outcome::new();
    for k in &grid {
        let f = k.table.flags;
        let got = (k.table.lambda(), k.table.c, f.i4_eq_qi3, f.i3_eq_qi2, f.q_cap_i2_eq_qi);
        let want = (k.d as u64, k.d as u64, true, false, true);
        o.check(got == want, || format!("{}: (λ, c, I⁴=QI³, I³=QI², Q∩I²=QI) = {got:?}", k.label));
    }
    report(3, "family Sally data: λ = c = d, m^4 = Qm^3, m^3 ≠ Qm^2, Q ∩ m^2 = Qm", &o, &mut all);

    let mut o = Outcome::new();
    for k in &grid {
        let i2 = k.i.power(2).unwrap();
        let rr = ratliff_rush(&i2, DEFAULT_RR_CAP).unwrap();
        let gap = quotient_length(&rr, &i2).unwrap().value;
        let probe = depth_probe(&k.i, &k.q, 4).unwrap();
        o.check(gap == 1 && !probe.positive_depth, || {
            format!("{}: RR gap {gap}, positive_depth {}", k.label, probe.positive_depth)
        });
    }
    report(4, "Ratliff-Rush gap ℓ(RR(m^2)/m^2) = 1 and depth G = 0", &o, &mut all);

    let mut o = Outcome::new();
    for k in grid.iter().chain(&fixtures[..2]) {
        let rep = decomposition_with(&k.table, &k.data, 6);
        o.check(rep.holds && rep.checked_up_to == 6, || format!("{}: {rep:?}", k.label));
    }
    report(5, "length decomposition through ℓ(C_n), n = 0..6, family and plane fixtures", &o, &mut all);

    let mut o = Outcome::new();
    for k in grid.iter().chain(&lower) {
        let want = RankOneCase::of(k.c as u64, k.d);
        o.check(k.class.branch == Branch::SallyRankOne && k.class.case == Some(want) && k.class.matches, || {
            format!("{}: {:?} {:?} match {}", k.label, k.class.branch, k.class.case, k.class.matches)
        });
        for n in 2..=6 {
            let want = c_length_by_count(n, k.d, k.c);
            o.check(k.table.c_at(n) as i64 == want, || {
                format!("{}: ℓ(C_{n}) = {}, expected {want}", k.label, k.table.c_at(n))
            });
        }
    }
    let k = &lower[0];
    let (e0, e1, e2) = (k.data.e(0), k.data.e(1), k.data.e(2));
    o.check(k.class.case == Some(RankOneCase::One) && e2 == e1 - e0 + k.table.colength as i64 + 1, || {
        format!("{}: e = {:?}", k.label, k.data.coefficients)
    });
    o.check(k.data.coefficients == vec![4, 5, 3], || format!("{}: e = {:?}", k.label, k.data.coefficients));
    report(6, "rank-one case coherence: c = d on the grid, c = 1 < d on (0,2,1), ℓ(C_n) closed form", &o, &mut all);

    let mut o = Outcome::new();
    let mut runner = TestRunner::deterministic();
    let strategy = (2usize..=3).prop_flat_map(|nv| {
        (
            proptest::collection::vec(1u16..=5, nv),
            proptest::collection::vec(proptest::collection::vec(0u16..=4, nv), 0..=3),
        )
    });
    let mut tried = 0;
    for _ in 0..40 {
        let (pure, mixed) = strategy.new_tree(&mut runner).unwrap().current();
        let nv = pure.len();
        let mut gens: Vec<Vec<u16>> =
            (0..nv).map(|i| (0..nv).map(|j| if i == j { pure[i] } else { 0 }).collect()).collect();
        gens.extend(mixed.into_iter().filter(|e| e.iter().any(|&x| x > 0)));
        let names: Vec<&str> = ["x", "y", "z"][..nv].to_vec();
        let r = RingPresentation::regular(Field::Rational, &names);
        let polys = gens
            .iter()
            .map(|e| {
                Polynomial::monomial(nv, Field::Rational, MonomialOrder::GrevLex, Monomial::from_exponents(e), Field::Rational.one())
            })
            .collect();
        let truncation = pure.iter().map(|&a| a as u32 - 1).sum::<u32>() + 1;
        let oracle = monomial_length_oracle(nv, &gens, truncation).unwrap().value;
        let got = artinian_length(&r.ideal(polys)).unwrap().value;
        o.check(got == oracle, || format!("{gens:?}: {got} vs oracle {oracle}"));
        tried += 1;
    }
    report(7, &format!("artinian_length agrees with the monomial oracle ({tried} random ideals)"), &o, &mut all);

    let mut o = Outcome::new();
    for k in grid.iter().chain(&lower).chain(&fixtures) {
        let l = k.table.colength as i64;
        let (e0, e1) = (k.data.e(0), k.data.e(1));
        let f = k.table.flags;
        o.check(e1 >= e0 - l, || format!("{}: Northcott fails", k.label));
        o.check((e1 == e0 - l) == f.i2_eq_qi, || format!("{}: Northcott equality vs I² = QI", k.label));
        if f.q_cap_i2_eq_qi {
            let b = e0 - l + k.table.lambda() as i64;
            o.check(e1 >= b, || format!("{}: e1 = {e1} < {b}", k.label));
            o.check((e1 == b) == f.i3_eq_qi2, || format!("{}: equality vs I³ = QI²", k.label));
        }
    }
    report(8, &format!("Northcott and Sally-module inequalities, equality cases ({} pairs)", grid.len() + lower.len() + fixtures.len()), &o, &mut all);

    let mut o = Outcome::new();
    for k in grid.iter().chain(&lower).chain(&fixtures) {
        o.check(k.data.two_path_agreement(), || {
            format!("{}: fit {:?} vs numerator {:?}", k.label, k.data.coefficients, k.data.numerator_coefficients)
        });
    }
    report(9, "coefficient fit agrees with numerator derivatives on every fixture", &o, &mut all);

    println!("acceptance: {} in {:.1?}", if all { "all criteria pass" } else { "FAILURES" }, started.elapsed());
    if !all {
        std::process::exit(1);
    }
}
