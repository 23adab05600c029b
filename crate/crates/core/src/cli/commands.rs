use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use super::document::{LoadedRing, RingDocument};
use super::family::{build_family, FamilySpec};
use super::report::Report;
use crate::error::{Error, Result};
use crate::hilbert::{binom, coefficients_from_numerator, hilbert_data, HilbertData};
use crate::ideals::{artinian_length, quotient_length, IdealHandle};
use crate::poly::Field;
use crate::sally::{
    classify_with, decomposition_with, depth_probe, e1_formula_with, ratliff_rush, sally_table,
    Branch, RankOneCase, DEFAULT_N_MAX, DEFAULT_RR_CAP,
};

#[derive(Parser, Debug)]
#[command(name = "hilbert-sally", version, about = "Hilbert-Samuel functions and Sally modules of m-primary ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Debug)]
struct Common {
    /// ring document (JSON)
    #[arg(long)]
    ring: PathBuf,
    /// name of the ideal I in the document
    #[arg(long, default_value = "I")]
    ideal: String,
    /// name of the reduction Q in the document
    #[arg(long)]
    reduction: Option<String>,
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// overrides the field of the document: rational or prime:<p>
    #[arg(long)]
    field: Option<String>,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long, default_value = "rational")]
    field: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ℓ(A/I), or ℓ(A/I^(n+1)) with --power n
    Length {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        power: Option<usize>,
    },
    /// Hilbert coefficients e_0..e_d
    Coeffs(Common),
    /// Hilbert series numerator and Hilbert function
    Series(Common),
    /// Sally module lengths and reduction flags
    SallyReport(Common),
    /// Ratliff-Rush closure of I
    Rr(Common),
    /// bounded depth certificates for the associated graded ring
    DepthProbe(Common),
    /// closed form matching the Hilbert function of I
    Classify(Common),
    /// all checks on a member of the example family
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// print the ring document of a family member
    FamilyEmit(FamilyArgs),
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    if e.is_resource() {
        3
    } else {
        2
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_command<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandOutcome { code, stdout: text, stderr: String::new() }
            } else {
                CommandOutcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(cli.command) {
        Ok((code, stdout)) => CommandOutcome { code, stdout, stderr: String::new() },
        Err(e) => CommandOutcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Table => report.to_table(),
    }
}

fn load(common: &Common) -> Result<LoadedRing> {
    let text = std::fs::read_to_string(&common.ring)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", common.ring.display())))?;
    let mut doc = RingDocument::parse(&text)?;
    if let Some(f) = &common.field {
        doc.field = Field::parse(f)?.descriptor();
        return doc.load();
    }
    doc.load()
}

struct Context {
    loaded: LoadedRing,
    report: Report,
}

impl Context {
    fn new(common: &Common) -> Result<Self> {
        let loaded = load(common)?;
        let mut report = Report::new();
        report.ring(&loaded.ring);
        let i = loaded.ideal(&common.ideal)?;
        let q = match &common.reduction {
            Some(n) => Some((n.as_str(), loaded.ideal(n)?)),
            None => None,
        };
        report.ideal(&common.ideal, i, q);
        if let Field::Prime(p) = loaded.ring.field() {
            report.warn(format!("computed over GF({p}); values may differ from characteristic zero"));
        }
        Ok(Context { loaded, report })
    }

    fn ideal(&self, common: &Common) -> Result<&IdealHandle> {
        self.loaded.ideal(&common.ideal)
    }

    fn reduction(&self, common: &Common) -> Result<&IdealHandle> {
        match &common.reduction {
            Some(n) => self.loaded.ideal(n),
            None => Err(Error::Input("this command needs --reduction".into())),
        }
    }
}

fn put_hilbert(report: &mut Report, data: &HilbertData) {
    report.set("values", &data.values);
    report.set("coefficients", &data.coefficients);
    report.set("numerator", &data.numerator);
    report.set("certified_up_to", data.certified_up_to);
}

fn execute(command: Command) -> Result<(i32, String)> {
    match command {
        Command::Length { common, power } => {
            let mut cx = Context::new(&common)?;
            let i = cx.ideal(&common)?;
            let target = match power {
                Some(n) => i.power(n + 1)?,
                None => i.clone(),
            };
            let l = artinian_length(&target)?;
            cx.report.set("length", json!({
                "power": power,
                "value": l.value,
                "truncation": l.truncation,
                "witness": l.witness,
            }));
            Ok((0, render(&cx.report, common.format)))
        }
        Command::Coeffs(common) => {
            let mut cx = Context::new(&common)?;
            let i = cx.ideal(&common)?.clone();
            let data = hilbert_data(&i, common.n_max)?;
            put_hilbert(&mut cx.report, &data);
            cx.report.set("dimension", data.dimension);
            cx.report.set("postulation", data.postulation);
            cx.report.set("two_path_agreement", data.two_path_agreement());
            if common.reduction.is_some() {
                let q = cx.reduction(&common)?;
                let lq = artinian_length(q)?.value;
                // e_0(Q) = e_0(I) for a reduction; equality with ℓ(A/Q) means A is Cohen-Macaulay
                cx.report.set("reduction_colength", lq);
                if lq as i64 != data.e(0) {
                    cx.report.warn("ℓ(A/Q) ≠ e_0: the ring is not Cohen-Macaulay or Q is not a reduction");
                }
            }
            Ok((0, render(&cx.report, common.format)))
        }
        Command::Series(common) => {
            let mut cx = Context::new(&common)?;
            let i = cx.ideal(&common)?.clone();
            let data = hilbert_data(&i, common.n_max)?;
            put_hilbert(&mut cx.report, &data);
            cx.report.set("hilbert_function", &data.hilbert_function);
            cx.report.set("dimension", data.dimension);
            Ok((0, render(&cx.report, common.format)))
        }
        Command::SallyReport(common) => {
            let mut cx = Context::new(&common)?;
            let (i, q) = (cx.ideal(&common)?.clone(), cx.reduction(&common)?.clone());
            let t = sally_table(&i, &q, common.n_max)?;
            cx.report.sally(&t);
            cx.report.set("certified_up_to", t.n_max);
            if !t.flags.q_cap_i2_eq_qi {
                cx.report.warn("Q ∩ I^2 ≠ QI");
            }
            Ok((0, render(&cx.report, common.format)))
        }
        Command::Rr(common) => {
            let mut cx = Context::new(&common)?;
            let i = cx.ideal(&common)?.clone();
            let rr = ratliff_rush(&i, DEFAULT_RR_CAP)?;
            let gap = quotient_length(&rr, &i)?;
            cx.report.set("ratliff_rush", json!({
                "generators": rr.gb()?.polys().iter().map(|p| p.format(i.ring().names())).collect::<Vec<_>>(),
                "gap": gap.value,
            }));
            Ok((0, render(&cx.report, common.format)))
        }
        Command::DepthProbe(common) => {
            let mut cx = Context::new(&common)?;
            let (i, q) = (cx.ideal(&common)?.clone(), cx.reduction(&common)?.clone());
            let p = depth_probe(&i, &q, common.n_max)?;
            cx.report.set("certified_up_to", p.certified_up_to);
            cx.report.set("depth", &p);
            Ok((0, render(&cx.report, common.format)))
        }
        Command::Classify(common) => {
            let mut cx = Context::new(&common)?;
            let (i, q) = (cx.ideal(&common)?.clone(), cx.reduction(&common)?.clone());
            let t = sally_table(&i, &q, common.n_max)?;
            let data = hilbert_data(&i, common.n_max)?;
            let rep = classify_with(&i, &t, &data)?;
            put_hilbert(&mut cx.report, &data);
            cx.report.sally(&t);
            for w in &rep.warnings {
                cx.report.warn(w.clone());
            }
            cx.report.set("classification", &rep);
            cx.report.set("decomposition", decomposition_with(&t, &data, common.n_max));
            cx.report.set("e1_check", e1_formula_with(&t, &data));
            Ok((0, render(&cx.report, common.format)))
        }
        Command::Verify { family, n_max, format } => {
            let spec = FamilySpec::new(family.m, family.d, family.c)?;
            let field = Field::parse(&family.field)?;
            let report = verify_family(spec, field, n_max)?;
            let pass = report.get("status") == Some(&json!("pass"));
            Ok((if pass { 0 } else { 1 }, render(&report, format)))
        }
        Command::FamilyEmit(family) => {
            let spec = FamilySpec::new(family.m, family.d, family.c)?;
            let doc = build_family(spec, Field::parse(&family.field)?);
            Ok((0, doc.to_json() + "\n"))
        }
    }
}

/// `1 + (m+c+1) z + Σ_(j=3)^(c+2) (-1)^(j-1) C(c+1, j-1) z^j`.
pub fn family_numerator(m: usize, c: usize) -> Vec<i64> {
    let mut h = vec![1, (m + c + 1) as i64, 0];
    for j in 3..=c as i64 + 2 {
        let s = if j % 2 == 1 { 1 } else { -1 };
        h.push(s * binom(c as i64 + 1, j - 1));
    }
    while h.len() > 1 && h.last() == Some(&0) {
        h.pop();
    }
    h
}

struct Checks {
    map: serde_json::Map<String, Value>,
    pass: bool,
}

impl Checks {
    fn add<T: serde::Serialize + PartialEq>(&mut self, name: &str, expected: T, computed: T) {
        let ok = expected == computed;
        self.pass &= ok;
        self.map.insert(
            name.to_string(),
            json!({ "expected": expected, "computed": computed, "pass": ok }),
        );
    }
}

/// Every numeric claim about the family member `spec`, with expected and computed sides.
pub fn verify_family(spec: FamilySpec, field: Field, n_max: usize) -> Result<Report> {
    let FamilySpec { m, d, c } = spec;
    let doc = build_family(spec, field);
    let loaded = doc.load()?;
    let (i, q) = (loaded.ideal("I")?, loaded.ideal("Q")?);
    let mut report = Report::new();
    report.ring(&loaded.ring);
    report.ideal("I", i, Some(("Q", q)));
    report.set("family", spec);

    let data = hilbert_data(i, n_max)?;
    let t = sally_table(i, q, n_max.max(DEFAULT_N_MAX))?;
    let class = classify_with(i, &t, &data)?;
    let i2 = i.power(2)?;
    let rr = ratliff_rush(&i2, DEFAULT_RR_CAP)?;
    let rr_gap = quotient_length(&rr, &i2)?.value;
    let depth = depth_probe(i, q, n_max)?;
    let decomposition = decomposition_with(&t, &data, n_max);
    let e1 = e1_formula_with(&t, &data);

    let numerator = family_numerator(m, c);
    let mut ck = Checks { map: serde_json::Map::new(), pass: true };
    ck.add("dimension", d, data.dimension);
    ck.add("colength_of_maximal_ideal", 1, t.colength);
    ck.add("colength_of_reduction", (m + 2 * c + 2) as u64, artinian_length(q)?.value);
    if c == d {
        let mut e = vec![(m + 2 * d + 2) as i64, (m + 3 * d + 2) as i64];
        if d >= 2 {
            e.push(d as i64 + 1);
        }
        e.resize(d + 1, 0);
        ck.add("coefficients", e, data.coefficients.clone());
    } else {
        ck.add("coefficients", coefficients_from_numerator(&numerator, d)?, data.coefficients.clone());
    }
    ck.add("numerator", numerator, data.numerator.clone());
    ck.add("two_path_agreement", true, data.two_path_agreement());
    ck.add("lambda", c as u64, t.lambda());
    ck.add("c", c as u64, t.c);
    ck.add("i4_eq_qi3", true, t.flags.i4_eq_qi3);
    ck.add("i3_eq_qi2", false, t.flags.i3_eq_qi2);
    ck.add("q_cap_i2_eq_qi", true, t.flags.q_cap_i2_eq_qi);
    ck.add("reduction_number", 3, t.reduction_number);
    // the maximal ideal of A[w_1..w_(d-c)] has associated graded ring G[W], of positive depth when c < d
    ck.add("ratliff_rush_gap", if c == d { 1 } else { 0 }, rr_gap);
    ck.add("positive_depth", c < d, depth.positive_depth);
    ck.add("decomposition", true, decomposition.holds);
    ck.add("e1_gap", 1, e1.gap);
    ck.add("lambda_identity", true, e1.lambda_identity);
    ck.add("branch", Branch::SallyRankOne, class.branch);
    ck.add("case", Some(RankOneCase::of(c as u64, d)), class.case);
    ck.add("classification_match", true, class.matches);
    let c_formula: Vec<i64> = (2..=n_max).map(|n| crate::sally::rank_one_c_length(n, d, c)).collect();
    let c_computed: Vec<i64> = (2..=n_max).map(|n| t.c_at(n) as i64).collect();
    ck.add("c_lengths", c_formula, c_computed);

    put_hilbert(&mut report, &data);
    report.sally(&t);
    report.set("classification", &class);
    report.set("depth", &depth);
    report.set("decomposition", &decomposition);
    report.set("e1_check", &e1);
    report.set("checks", Value::Object(ck.map));
    report.set("status", if ck.pass { "pass" } else { "fail" });
    for w in &class.warnings {
        report.warn(w.clone());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_numerators() {
        assert_eq!(family_numerator(0, 2), vec![1, 3, 0, 3, -1]);
        assert_eq!(family_numerator(2, 1), vec![1, 4, 0, 1]);
        assert_eq!(family_numerator(2, 3), vec![1, 6, 0, 6, -4, 1]);
    }

    #[test]
    fn help_and_usage_errors() {
        let out = run_command(["hilbert-sally", "--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("verify"));
        let out = run_command(["hilbert-sally", "frobnicate"]);
        assert_eq!(out.code, 2);
        let out = run_command(["hilbert-sally", "verify", "--m", "0", "--d", "2", "--c", "3"]);
        assert_eq!(out.code, 2);
    }
}
