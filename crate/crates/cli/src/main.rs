use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use quadlattice::families::{derivative_ladder_check, labels_up_to, Family, FamilySpec, Ladder, Params};
use quadlattice::latticeops::{default_offset, grid, tensor_grid};
use quadlattice::pdeverify::{
    coefficients, difference_form_residual, family_recovery_mismatches, recover_coefficients, residual,
    second_order_residual, DifferenceKind, SecondOrderKind, TableKind,
};
use quadlattice::ttrr::{
    abc_json, connect_families, connection_mismatches, family_pair, family_vector, generate, recurrence_residual,
    sn_tn, sn_tn_derived, LeadingChoice, Recurrence, SnTnSource, TtrrFamily,
};
use quadlattice::{Error, Rational, C};

const EXIT_USAGE: u8 = 1;
const EXIT_DEGENERATE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "quadlattice", version, about = "Exact checks for bivariate polynomial families on quadratic lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    opts: Opts,
}

#[derive(clap::Args, Debug, Clone)]
struct Opts {
    /// racah, racah-bar, wilson, wilson-bar, cdh, ch, ch-bar, ch-tri
    #[arg(long, global = true, default_value = "racah")]
    family: String,

    /// Degree label n,m or n,m,r
    #[arg(long, global = true)]
    label: Option<String>,

    #[arg(long, global = true)]
    max_total_degree: Option<usize>,

    /// Parameter override name=value with an exact rational value (repeatable)
    #[arg(long = "param", global = true)]
    params: Vec<String>,

    /// Grid points per axis
    #[arg(long, global = true)]
    grid_size: Option<usize>,

    /// Seed for the grid offset jitter
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Value of one family member at a point
    Eval {
        #[arg(long)]
        point: String,
    },
    /// Residual sweep of the fourth-order equation
    VerifyPde,
    /// First-order ladder identities
    VerifyLadder,
    /// Second-order equations in one variable
    VerifySecondOrder,
    /// Equations written with shift operators
    VerifyDifferenceForm,
    /// Recover equation coefficients from the family and compare with the tables
    RecoverCoeffs,
    /// Recurrence matrices up to n
    Ttrr {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Polynomial vectors up to n
    Generate {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GenerateKind::Monic)]
        kind: GenerateKind,
    },
    /// Connection matrices between a family and its barred partner
    Connect {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Residual sweep of the trivariate equation
    VerifyTrivariate,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GenerateKind {
    Monic,
    Family,
}

/// A finished command: its result body and whether every check came out exact.
struct Outcome {
    body: Value,
    pass: bool,
}

impl Outcome {
    fn pass(body: Value) -> Self {
        Outcome { body, pass: true }
    }
}

struct Run {
    spec: FamilySpec,
    opts: Opts,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let name = command_name(&cli.command);
    let opts = cli.opts.clone();
    let (report, code) = match execute(&cli) {
        Ok((spec, outcome)) => {
            let code = if outcome.pass { 0 } else { EXIT_MISMATCH };
            (envelope(name, &opts, Some(&spec), outcome.pass, outcome.body), code)
        }
        Err(e) => {
            let code = match e {
                Error::Degenerate(_) | Error::SingularPoint { .. } | Error::DivisionByZero | Error::SingularMatrix { .. } => {
                    EXIT_DEGENERATE
                }
                Error::Inconsistent(_) => EXIT_MISMATCH,
                _ => EXIT_USAGE,
            };
            let body = json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } });
            (envelope(name, &opts, resolve_spec(&cli).ok().as_ref(), false, body), code)
        }
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    match &opts.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Eval { .. } => "eval",
        Command::VerifyPde => "verify-pde",
        Command::VerifyLadder => "verify-ladder",
        Command::VerifySecondOrder => "verify-second-order",
        Command::VerifyDifferenceForm => "verify-difference-form",
        Command::RecoverCoeffs => "recover-coeffs",
        Command::Ttrr { .. } => "ttrr",
        Command::Generate { .. } => "generate",
        Command::Connect { .. } => "connect",
        Command::VerifyTrivariate => "verify-trivariate",
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division-by-zero",
        Error::SingularPoint { .. } => "singular-point",
        Error::Degenerate(_) => "degenerate-parameters",
        Error::SingularMatrix { .. } => "singular-matrix",
        Error::Dimension(_) => "dimension",
        Error::Inconsistent(_) => "inconsistent",
        Error::Parse(_) => "parse",
        Error::Usage(_) => "usage",
    }
}

/// The fields every report carries.
fn envelope(command: &str, opts: &Opts, spec: Option<&FamilySpec>, pass: bool, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("version".into(), json!(concat!("quadlattice ", env!("CARGO_PKG_VERSION"))));
    m.insert("family".into(), spec.map_or_else(|| json!(opts.family), |s| json!(s.family)));
    m.insert("seed".into(), json!(opts.seed));
    if let Some(spec) = spec {
        m.insert("params".into(), serde_json::to_value(&spec.params).expect("params serialize"));
        if let Ok(t) = coefficients(TableKind::for_family(spec.family), &spec.params) {
            let digest = Sha256::digest(serde_json::to_string(&t.to_json()).expect("table serializes"));
            m.insert("tables".into(), json!({ "name": t.name, "sha256": hex::encode(digest) }));
        }
    }
    m.insert("pass".into(), json!(pass));
    m.insert("result".into(), body);
    Value::Object(m)
}

fn resolve_spec(cli: &Cli) -> quadlattice::Result<FamilySpec> {
    let family: Family = match cli.command {
        Command::VerifyTrivariate => Family::ChTri,
        _ => cli.opts.family.parse()?,
    };
    FamilySpec::new(family, resolve_params(family, &cli.opts.params)?)
}

fn execute(cli: &Cli) -> quadlattice::Result<(FamilySpec, Outcome)> {
    let run = Run { spec: resolve_spec(cli)?, opts: cli.opts.clone() };
    let outcome = match &cli.command {
        Command::Eval { point } => run.eval(point)?,
        Command::VerifyPde | Command::VerifyTrivariate => run.verify_pde()?,
        Command::VerifyLadder => run.verify_ladder()?,
        Command::VerifySecondOrder => run.verify_second_order()?,
        Command::VerifyDifferenceForm => run.verify_difference_form()?,
        Command::RecoverCoeffs => run.recover()?,
        Command::Ttrr { n } => run.ttrr(*n)?,
        Command::Generate { n, kind } => run.generate(*n, *kind)?,
        Command::Connect { n } => run.connect(*n)?,
    };
    Ok((run.spec, outcome))
}

fn resolve_params(family: Family, overrides: &[String]) -> quadlattice::Result<Params> {
    let mut p = family.param_kind().defaults();
    for o in overrides {
        let (name, value) = o
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("--param expects name=value, got {o:?}")))?;
        let v: Rational = value.trim().parse()?;
        p.set(name.trim(), v)?;
    }
    Ok(p)
}

fn parse_list<T: std::str::FromStr<Err = Error>>(s: &str) -> quadlattice::Result<Vec<T>> {
    s.split(',').map(|t| t.trim().parse()).collect()
}

fn parse_label(s: &str) -> quadlattice::Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("label entry {t:?} is not a degree"))))
        .collect()
}

fn strs(v: &[C]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

/// One residual entry of a sweep.
fn residual_entry(label: &[usize], point: &[C], value: &C) -> Value {
    json!({ "label": label, "point": strs(point), "value": value.to_string(), "pass": value.is_zero() })
}

impl Run {
    fn arity(&self) -> usize {
        self.spec.family.arity()
    }

    fn max_degree(&self, default: usize) -> usize {
        self.opts.max_total_degree.unwrap_or(default)
    }

    /// Labels to sweep: the one asked for, or every label up to the degree bound.
    fn labels(&self, default_degree: usize) -> quadlattice::Result<Vec<Vec<usize>>> {
        match &self.opts.label {
            Some(l) => {
                let l = parse_label(l)?;
                if l.len() != self.arity() {
                    return Err(Error::Usage(format!("{} needs a label of {} degrees", self.spec.family, self.arity())));
                }
                Ok(vec![l])
            }
            None => Ok(labels_up_to(self.arity(), self.max_degree(default_degree))),
        }
    }

    /// Tensor grid with enough distinct lattice values per axis to pin down a polynomial of the given degree.
    fn points(&self, degree: usize, default_size: usize) -> quadlattice::Result<Vec<Vec<C>>> {
        let size = self.opts.grid_size.unwrap_or(default_size);
        let mut rng = self.opts.seed.map(ChaCha8Rng::seed_from_u64);
        let mut axes = Vec::new();
        for lat in self.spec.lattices() {
            let mut offset = default_offset();
            if let Some(r) = rng.as_mut() {
                offset = &offset + &Rational::frac(r.gen_range(0..1000), 1009);
            }
            let axis = grid(size, &offset);
            let mut values: Vec<C> = axis.iter().map(|s| lat.value(s)).collect();
            values.sort_by_key(|v| v.to_string());
            values.dedup();
            if values.len() <= degree {
                return Err(Error::Usage(format!(
                    "grid size {size} gives {} distinct values on the {lat} lattice; degree {degree} needs more than {degree}",
                    values.len()
                )));
            }
            axes.push(axis);
        }
        Ok(tensor_grid(&axes))
    }

    /// Residual sweep over labels × points, sorted by label then point.
    fn sweep(
        &self,
        labels: &[Vec<usize>],
        points: &[Vec<C>],
        mut f: impl FnMut(&[usize], &[C]) -> quadlattice::Result<C>,
    ) -> quadlattice::Result<Outcome> {
        let mut entries = Vec::new();
        let mut per_label = Vec::new();
        let mut all = true;
        for l in labels {
            let mut ok = true;
            for p in points {
                let v = f(l, p)?;
                ok &= v.is_zero();
                entries.push(residual_entry(l, p, &v));
            }
            all &= ok;
            per_label.push(json!({ "label": l, "pass": ok }));
        }
        Ok(Outcome { body: json!({ "labels": per_label, "residuals": entries }), pass: all })
    }

    fn degree_of(labels: &[Vec<usize>]) -> usize {
        labels.iter().map(|l| l.iter().sum::<usize>()).max().unwrap_or(0)
    }

    fn eval(&self, point: &str) -> quadlattice::Result<Outcome> {
        let label = parse_label(self.opts.label.as_deref().ok_or_else(|| Error::Usage("eval needs --label".into()))?)?;
        let pt: Vec<C> = parse_list(point)?;
        self.spec.validate(label.iter().sum())?;
        let v = self.spec.eval(&label, &pt)?;
        Ok(Outcome::pass(json!({ "label": label, "point": strs(&pt), "value": v.to_string() })))
    }

    fn verify_pde(&self) -> quadlattice::Result<Outcome> {
        let default = if self.arity() == 3 { 2 } else { 3 };
        let labels = self.labels(default)?;
        let d = Self::degree_of(&labels);
        self.spec.validate(d)?;
        let points = self.points(d, d + 1)?;
        let table = coefficients(TableKind::for_family(self.spec.family), &self.spec.params)?;
        self.sweep(&labels, &points, |l, p| residual(&table, &self.spec, l, p))
    }

    fn verify_ladder(&self) -> quadlattice::Result<Outcome> {
        let ladders: Vec<Ladder> = Ladder::ALL.into_iter().filter(|l| l.family() == self.spec.family).collect();
        if ladders.is_empty() {
            return Err(Error::Usage(format!("no ladder identity for {}", self.spec.family)));
        }
        let labels = self.labels(3)?;
        let d = Self::degree_of(&labels);
        self.spec.validate(d)?;
        let points = self.points(d, d + 1)?;
        let mut body = Map::new();
        let mut pass = true;
        for ladder in ladders {
            let o = self.sweep(&labels, &points, |l, p| derivative_ladder_check(ladder, &self.spec.params, l, p))?;
            pass &= o.pass;
            body.insert(format!("{ladder:?}"), o.body);
        }
        Ok(Outcome { body: Value::Object(body), pass })
    }

    fn verify_second_order(&self) -> quadlattice::Result<Outcome> {
        let kinds: Vec<SecondOrderKind> = SecondOrderKind::ALL.into_iter().filter(|k| k.family() == self.spec.family).collect();
        if kinds.is_empty() {
            return Err(Error::Usage(format!("no second-order equation for {}", self.spec.family)));
        }
        let labels = self.labels(3)?;
        let d = Self::degree_of(&labels);
        self.spec.validate(d)?;
        let points = self.points(d, d + 1)?;
        let mut body = Map::new();
        let mut pass = true;
        for kind in kinds {
            let o = self.sweep(&labels, &points, |l, p| second_order_residual(kind, &self.spec.params, l, p))?;
            pass &= o.pass;
            body.insert(format!("{kind:?}"), o.body);
        }
        Ok(Outcome { body: Value::Object(body), pass })
    }

    fn verify_difference_form(&self) -> quadlattice::Result<Outcome> {
        let kind = match self.spec.family {
            Family::RacahBiv | Family::RacahBivBar => DifferenceKind::RacahNinePoint,
            Family::WilsonBiv | Family::WilsonBivBar | Family::CdhBiv => DifferenceKind::WilsonF,
            Family::ChBiv | Family::ChBivBar => DifferenceKind::ChF,
            Family::ChTri => return Err(Error::Usage("no difference form for ch-tri".into())),
        };
        let labels = self.labels(3)?;
        let d = Self::degree_of(&labels);
        self.spec.validate(d)?;
        let points = self.points(d, d + 1)?;
        let o = self.sweep(&labels, &points, |l, p| difference_form_residual(kind, &self.spec, l, p))?;
        Ok(Outcome { body: json!({ "form": format!("{kind:?}"), "sweep": o.body }), pass: o.pass })
    }

    fn recover(&self) -> quadlattice::Result<Outcome> {
        self.spec.validate(4)?;
        let points = self.points(1, 2)?;
        let family_side = family_recovery_mismatches(&self.spec, &points)?;
        let mut body = Map::new();
        let mut pass = family_side.is_empty();
        body.insert("points".into(), json!(points.iter().map(|p| strs(p)).collect::<Vec<_>>()));
        body.insert("family_mismatches".into(), serde_json::to_value(&family_side).expect("mismatches serialize"));
        if TableKind::for_family(self.spec.family) == TableKind::Racah {
            let report = recover_coefficients(&self.spec.params)?;
            pass &= report.mismatches.is_empty();
            body.insert("stencil_mismatches".into(), serde_json::to_value(&report.mismatches).expect("mismatches serialize"));
            body.insert("recovered".into(), report.recovered.to_json());
        }
        Ok(Outcome { body: Value::Object(body), pass })
    }

    fn ttrr(&self, n: usize) -> quadlattice::Result<Outcome> {
        let fam = TtrrFamily::for_family(self.spec.family)?;
        let params = &self.spec.params;
        let table = coefficients(fam.table_kind(), params)?;
        let rec = Recurrence::build(fam, params, SnTnSource::Printed, LeadingChoice::Identity, n + 1)?;
        let steps = (0..=n).map(|k| abc_json(&rec, k)).collect::<quadlattice::Result<Vec<_>>>()?;
        let eigen: Vec<Value> = (0..=n + 1).map(|k| json!({ "k": k, "lambda": table.eigenvalue(k).to_string() })).collect();

        // printed closed forms against the operator-derived matrices
        let mut diffs = Vec::new();
        for k in 1..=n + 1 {
            let printed = sn_tn(fam, params, k)?;
            let derived = sn_tn_derived(fam, params, k)?;
            for (name, a, b) in [("Sn", &printed.0, &derived.0), ("Tn", &printed.1, &derived.1)] {
                if a != b {
                    diffs.push(json!({ "n": k, "matrix": name, "printed": a, "derived": b }));
                }
            }
        }
        // the monic family must satisfy the recurrence it came from
        let vectors = generate(&rec, n + 1)?;
        let mut residuals = Vec::new();
        for k in 0..=n {
            let abc = rec.abc(k)?;
            for j in 0..2 {
                let r = recurrence_residual(&abc, &vectors, j);
                if r.iter().any(|p| !p.is_zero()) {
                    residuals.push(json!({ "n": k, "j": j + 1, "residual": r.iter().map(|p| p.to_string()).collect::<Vec<_>>() }));
                }
            }
        }
        let pass = diffs.is_empty() && residuals.is_empty();
        Ok(Outcome {
            body: json!({
                "family": format!("{fam:?}"),
                "basis": basis_name(fam),
                "eigenvalues": eigen,
                "steps": steps,
                "sn_tn_diffs": diffs,
                "recurrence_failures": residuals,
            }),
            pass,
        })
    }

    fn generate(&self, n: usize, kind: GenerateKind) -> quadlattice::Result<Outcome> {
        let fam = TtrrFamily::for_family(self.spec.family)?;
        let params = &self.spec.params;
        match kind {
            GenerateKind::Monic => {
                let rec = Recurrence::build(fam, params, SnTnSource::Printed, LeadingChoice::Identity, n + 1)?;
                let v = generate(&rec, n)?;
                let pass = v.iter().all(|p| p.block(p.n).is_identity());
                Ok(Outcome { body: json!({ "kind": "monic", "vectors": v.iter().map(|p| p.to_json()).collect::<Vec<_>>() }), pass })
            }
            GenerateKind::Family => {
                self.spec.validate(n)?;
                let rec = Recurrence::build(fam, params, SnTnSource::Printed, LeadingChoice::FamilyLeading(self.spec.family), n + 1)?;
                let from_rec = generate(&rec, n)?;
                let mut vectors = Vec::new();
                let mut diffs = Vec::new();
                for (k, r) in from_rec.iter().enumerate() {
                    let direct = family_vector(&self.spec, k)?;
                    if &direct != r {
                        diffs.push(json!({ "n": k, "recurrence": r.to_json(), "direct": direct.to_json() }));
                    }
                    vectors.push(direct.to_json());
                }
                let pass = diffs.is_empty();
                Ok(Outcome { body: json!({ "kind": "family", "vectors": vectors, "diffs": diffs }), pass })
            }
        }
    }

    fn connect(&self, n: usize) -> quadlattice::Result<Outcome> {
        let fam = TtrrFamily::for_family(self.spec.family)?;
        let (plain, bar) =
            family_pair(fam).ok_or_else(|| Error::Usage(format!("{} has no partner family to connect to", self.spec.family)))?;
        let (from, to) = if self.spec.family == bar { (bar, plain) } else { (plain, bar) };
        self.spec.validate(n)?;
        let params = &self.spec.params;
        let points = self.points(1, 2)?;
        let mut steps = Vec::new();
        let mut pass = true;
        for k in 0..=n {
            let c = connect_families(from, to, params, k)?;
            let back = connect_families(to, from, params, k)?;
            let inverse_ok = c.checked_mul(&back)?.is_identity();
            let pointwise = connection_mismatches(from, to, params, k, &points)?;
            pass &= inverse_ok && pointwise == 0;
            steps.push(json!({ "n": k, "C": c, "inverse_ok": inverse_ok, "pointwise_mismatches": pointwise }));
        }
        Ok(Outcome { body: json!({ "from": from, "to": to, "steps": steps }), pass })
    }
}

fn basis_name(f: TtrrFamily) -> &'static str {
    match f {
        TtrrFamily::Racah => "quadratic-lattice F basis",
        _ => "monomials in the lattice variables",
    }
}
