//! Coefficient tables of the partial divided-difference equations, exact
//! residuals, derived (hypergeometric-type) tables and the recovery oracle.

pub mod tables;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactfield::{Rational, C};
use crate::families::{Family, FamilySpec, ParamKind, Params};
use crate::formula::{Bindings, Formula};
use crate::latticeops::{apply, apply_chain, LatticeSpec, Memo, Op, OpStep, StencilFunction};
use crate::matrix::ExactMatrix;
use crate::poly::{interpolate_grid, MultiPoly, UniPoly};

/// Which printed equation a table comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TableKind {
    Racah,
    Wilson,
    Cdh,
    Ch,
    ChTri,
}

impl TableKind {
    pub const ALL: [TableKind; 5] = [TableKind::Racah, TableKind::Wilson, TableKind::Cdh, TableKind::Ch, TableKind::ChTri];

    pub fn for_family(f: Family) -> Self {
        match f {
            Family::RacahBiv | Family::RacahBivBar => TableKind::Racah,
            Family::WilsonBiv | Family::WilsonBivBar => TableKind::Wilson,
            Family::CdhBiv => TableKind::Cdh,
            Family::ChBiv | Family::ChBivBar => TableKind::Ch,
            Family::ChTri => TableKind::ChTri,
        }
    }

    pub fn param_kind(self) -> ParamKind {
        match self {
            TableKind::Racah => ParamKind::Racah,
            TableKind::Wilson => ParamKind::Wilson,
            TableKind::Cdh => ParamKind::Cdh,
            TableKind::Ch => ParamKind::Ch,
            TableKind::ChTri => ParamKind::ChTri,
        }
    }

    /// A family whose lattices this table lives on.
    pub fn family(self) -> Family {
        match self {
            TableKind::Racah => Family::RacahBiv,
            TableKind::Wilson => Family::WilsonBiv,
            TableKind::Cdh => Family::CdhBiv,
            TableKind::Ch => Family::ChBiv,
            TableKind::ChTri => Family::ChTri,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TableKind::Racah => "racah",
            TableKind::Wilson => "wilson",
            TableKind::Cdh => "cdh",
            TableKind::Ch => "ch",
            TableKind::ChTri => "ch-tri",
        }
    }
}

/// Per-variable operator exponents: 0 identity, 1 S∘D, 2 D².
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MixedOpIndex(pub Vec<u8>);

impl MixedOpIndex {
    pub fn new(entries: &[u8]) -> Self {
        assert!(entries.iter().all(|&l| l <= 2), "operator exponents are 0, 1 or 2");
        MixedOpIndex(entries.to_vec())
    }

    /// Steps outermost first, first variable outermost.
    pub fn steps(&self) -> Vec<OpStep> {
        let mut out = Vec::new();
        for (axis, &l) in self.0.iter().enumerate() {
            match l {
                1 => {
                    out.push(OpStep { axis, op: Op::S });
                    out.push(OpStep { axis, op: Op::D });
                }
                2 => {
                    out.push(OpStep { axis, op: Op::D });
                    out.push(OpStep { axis, op: Op::D });
                }
                _ => {}
            }
        }
        out
    }

    pub fn order(&self) -> u32 {
        self.0.iter().map(|&l| l as u32).sum()
    }

    /// All nonzero indices in p variables, ordered by (order, entries).
    pub fn all(p: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (1..3usize.pow(p as u32))
            .map(|mut code| {
                let mut e = vec![0u8; p];
                for slot in e.iter_mut().rev() {
                    *slot = (code % 3) as u8;
                    code /= 3;
                }
                MixedOpIndex(e)
            })
            .collect();
        out.sort_by_key(|m| (m.order(), m.0.clone()));
        out
    }
}

impl fmt::Display for MixedOpIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "E({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficient {
    pub label: String,
    pub index: MixedOpIndex,
    pub poly: MultiPoly,
}

/// Coefficients f_i (polynomials in the lattice variables) and the eigenvalue
/// as a polynomial in the total degree k of the solution it is applied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    pub name: String,
    pub lattices: Vec<LatticeSpec>,
    pub coeffs: Vec<Coefficient>,
    pub eigen: UniPoly,
}

fn param_bindings(b: &mut Bindings, params: &Params) {
    for (name, v) in params.entries() {
        b.rational(name, v);
    }
    b.imaginary_unit();
}

/// Evaluates formula text in the lattice variables of a table kind.
fn lattice_poly(kind: TableKind, params: &Params, src: &str) -> Result<MultiPoly> {
    let f = Formula::parse(src)?;
    let (nv, names): (usize, &[&str]) = match kind {
        TableKind::Racah => (2, &["X", "Y"]),
        TableKind::Wilson | TableKind::Cdh | TableKind::Ch => (2, &["x", "y"]),
        TableKind::ChTri => (3, &["x", "y", "z"]),
    };
    let mut b = Bindings::new(nv);
    param_bindings(&mut b, params);
    for (k, n) in names.iter().enumerate() {
        b.variable(n, k);
    }
    let mut p = f.eval(&b)?;
    if matches!(kind, TableKind::Wilson | TableKind::Cdh) {
        for k in 0..nv {
            p = p
                .unsquare_var(k)
                .ok_or_else(|| Error::Parse(format!("odd power in a square-lattice formula: {src}")))?;
        }
    }
    Ok(p)
}

fn eigen_poly(params: &Params, src: &str) -> Result<UniPoly> {
    let mut b = Bindings::new(1);
    param_bindings(&mut b, params);
    b.variable("k", 0);
    let p = Formula::parse(src)?.eval(&b)?;
    Ok(p.to_uni(0).expect("univariate").trimmed())
}

/// The printed table of a family kind at the given parameters.
pub fn coefficients(kind: TableKind, params: &Params) -> Result<CoeffTable> {
    if params.kind() != kind.param_kind() {
        return Err(Error::Usage(format!("{} table needs {:?} parameters", kind.name(), kind.param_kind())));
    }
    let (texts, eigen): (Vec<&str>, &str) = match kind {
        TableKind::Racah => (tables::RACAH.to_vec(), tables::RACAH_EIGEN),
        TableKind::Wilson => (tables::WILSON.to_vec(), tables::WILSON_EIGEN),
        TableKind::Cdh => (tables::CDH.to_vec(), tables::CDH_EIGEN),
        TableKind::Ch => (tables::CH.to_vec(), tables::CH_EIGEN),
        TableKind::ChTri => (tables::TRIVARIATE.to_vec(), tables::TRIVARIATE_EIGEN),
    };
    let indices: Vec<MixedOpIndex> = if kind == TableKind::ChTri {
        tables::TRIVARIATE_INDEX.iter().map(|e| MixedOpIndex::new(e)).collect()
    } else {
        tables::BIVARIATE_INDEX.iter().map(|e| MixedOpIndex::new(e)).collect()
    };
    let coeffs = texts
        .iter()
        .zip(indices)
        .enumerate()
        .map(|(k, (src, index))| {
            Ok(Coefficient { label: format!("f{}", k + 1), index, poly: lattice_poly(kind, params, src)? })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoeffTable {
        name: kind.name().to_string(),
        lattices: kind.family().lattices(params),
        coeffs,
        eigen: eigen_poly(params, eigen)?,
    })
}

impl CoeffTable {
    pub fn nvars(&self) -> usize {
        self.lattices.len()
    }

    pub fn get(&self, label: &str) -> Option<&MultiPoly> {
        self.coeffs.iter().find(|c| c.label == label).map(|c| &c.poly)
    }

    pub fn by_index(&self, index: &[u8]) -> Option<&MultiPoly> {
        self.coeffs.iter().find(|c| c.index.0 == index).map(|c| &c.poly)
    }

    pub fn eigenvalue(&self, k: usize) -> C {
        self.eigen.eval(&C::from_int(k as i64))
    }

    /// Lattice values of a point given in family coordinates.
    pub fn lattice_point(&self, point: &[C]) -> Vec<C> {
        self.lattices.iter().zip(point).map(|(l, s)| l.value(s)).collect()
    }

    pub fn to_json(&self) -> Value {
        let axes = ["dx", "dy", "dz"];
        let mut coeffs = serde_json::Map::new();
        for c in &self.coeffs {
            let terms: Vec<Value> = c
                .poly
                .terms()
                .map(|(e, v)| {
                    let mut t = serde_json::Map::new();
                    for (k, d) in e.iter().enumerate() {
                        t.insert(axes[k].to_string(), json!(d));
                    }
                    t.insert("coeff".into(), json!(v.to_string()));
                    Value::Object(t)
                })
                .collect();
            coeffs.insert(c.label.clone(), Value::Array(terms));
        }
        let eigen: Vec<String> = self.eigen.0.iter().map(C::to_string).collect();
        json!({
            "table": self.name,
            "order": if self.nvars() == 3 { "sixth" } else { "fourth" },
            "operators": self.coeffs.iter().map(|c| json!({"label": c.label, "operator": c.index.to_string()})).collect::<Vec<_>>(),
            "eigenvalue_in_k": eigen,
            "coefficients": Value::Object(coeffs),
        })
    }
}

/// Σ f_i·E_i F + λ(k)·F at a point, for any stencil function F.
pub fn residual_fn(table: &CoeffTable, f: &dyn StencilFunction, k: usize, point: &[C]) -> Result<C> {
    if point.len() != table.nvars() {
        return Err(Error::Usage(format!("{} takes {}-dimensional points", table.name, table.nvars())));
    }
    let memo = Memo::new(|p: &[C]| f.eval(p));
    let lv = table.lattice_point(point);
    let mut acc = &table.eigenvalue(k) * &memo.eval(point)?;
    for c in &table.coeffs {
        let coef = c.poly.eval(&lv);
        if coef.is_zero() {
            continue;
        }
        acc += &(&coef * &apply_chain(&table.lattices, &c.index.steps(), &memo, point)?);
    }
    Ok(acc)
}

/// Residual of a family member in a table.
pub fn residual(table: &CoeffTable, spec: &FamilySpec, label: &[usize], point: &[C]) -> Result<C> {
    let member = spec.member(label);
    residual_fn(table, &member, label.iter().sum(), point)
}

/// Residual of the six-order equation for the trivariate family.
pub fn trivariate_residual(spec: &FamilySpec, label: &[usize], point: &[C]) -> Result<C> {
    if spec.family != Family::ChTri {
        return Err(Error::Usage("trivariate residual needs the ch-tri family".into()));
    }
    let table = coefficients(TableKind::ChTri, &spec.params)?;
    residual(&table, spec, label, point)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    X,
    Y,
    XY,
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" => Ok(Direction::X),
            "y" => Ok(Direction::Y),
            "xy" => Ok(Direction::XY),
            _ => Err(Error::Usage(format!("direction must be x, y or xy, got {s:?}"))),
        }
    }
}

/// One differentiation of a bivariate table along `axis`: the table satisfied by D_axis P.
fn derive_once(base: &CoeffTable, axis: usize) -> Result<CoeffTable> {
    if base.nvars() != 2 {
        return Err(Error::Usage("derived tables are defined for bivariate equations".into()));
    }
    let lat = &base.lattices[axis];
    let nv = 2;
    let kappa = MultiPoly::constant(nv, C::from(lat.kappa()));
    let u = lat.u_squared_poly(nv, axis);
    let d = |p: &MultiPoly| crate::latticeops::poly_apply(lat, axis, Op::D, p);
    let s = |p: &MultiPoly| crate::latticeops::poly_apply(lat, axis, Op::S, p);
    let idx = |la: u8, lb: u8| {
        let mut e = [0u8; 2];
        e[axis] = la;
        e[1 - axis] = lb;
        e
    };
    let get = |la: u8, lb: u8| base.by_index(&idx(la, lb)).cloned().unwrap_or_else(|| MultiPoly::zero(nv));
    let mut coeffs = Vec::new();
    for c in &base.coeffs {
        let (la, lb) = (c.index.0[axis], c.index.0[1 - axis]);
        let poly = match la {
            0 => &get(0, lb) + &d(&get(1, lb)),
            1 => &(&s(&get(1, lb)) + &(&kappa * &d(&get(1, lb)))) + &d(&get(2, lb)),
            _ => &(&s(&get(2, lb)) + &(&u * &d(&get(1, lb)))) + &(&kappa * &s(&get(1, lb))),
        };
        coeffs.push(Coefficient { label: c.label.clone(), index: c.index.clone(), poly });
    }
    // the solution has total degree one less; λ'(k) = λ(k+1) + D f(1,0)
    let shift = d(&get(1, 0)).as_constant().ok_or_else(|| {
        Error::Inconsistent("divided difference of the first-order coefficient is not constant".into())
    })?;
    let up = UniPoly(vec![C::one(), C::one()]);
    let mut eigen = UniPoly::zero();
    for (j, c) in base.eigen.0.iter().enumerate() {
        eigen = &eigen + &up.pow(j as u32).scale(c);
    }
    eigen = &eigen + &UniPoly::constant(shift);
    let suffix = if axis == 0 { "x" } else { "y" };
    Ok(CoeffTable {
        name: format!("{}/{suffix}", base.name),
        lattices: base.lattices.clone(),
        coeffs,
        eigen: eigen.trimmed(),
    })
}

/// The table satisfied by D_x P, D_y P or D_x D_y P.
pub fn derived_coefficients(base: &CoeffTable, direction: Direction) -> Result<CoeffTable> {
    match direction {
        Direction::X => derive_once(base, 0),
        Direction::Y => derive_once(base, 1),
        Direction::XY => derive_once(&derive_once(base, 1)?, 0),
    }
}

/// Parameter increments and argument offsets of one differentiation step.
fn shift_rule(kind: TableKind, axis: usize) -> Result<(Vec<(&'static str, Rational)>, [Rational; 2])> {
    let h = Rational::frac(1, 2);
    let one = Rational::one();
    let two = Rational::from(2);
    let z = Rational::zero();
    Ok(match (kind, axis) {
        (TableKind::Racah, 0) => (
            vec![("b1", one.clone()), ("b2", two.clone()), ("b3", two), ("N", -one.clone())],
            [h, one],
        ),
        (TableKind::Racah, _) => (vec![("b2", one.clone()), ("b3", two), ("N", -one)], [z, h]),
        (TableKind::Wilson, 0) => (vec![("a", h.clone()), ("b", h.clone()), ("e2", h)], [z.clone(), z]),
        (TableKind::Wilson, _) => (vec![("c", h.clone()), ("d", h.clone()), ("e2", h)], [z.clone(), z]),
        (TableKind::Cdh, 0) => (vec![("a", h.clone()), ("e2", h)], [z.clone(), z]),
        (TableKind::Cdh, _) => (vec![("b", h.clone()), ("c", h.clone()), ("e2", h)], [z.clone(), z]),
        (TableKind::Ch, 0) => (vec![("a1", h.clone()), ("e2", h.clone()), ("b1", h)], [z.clone(), z]),
        (TableKind::Ch, _) => (vec![("e2", h.clone()), ("a3", h.clone()), ("b3", h)], [z.clone(), z]),
        _ => return Err(Error::Usage(format!("no shifted-parameter form for {} along axis {axis}", kind.name()))),
    })
}

fn shift_once(kind: TableKind, params: &Params, lattices: &[LatticeSpec], translate: &mut [C], axis: usize) -> Result<Params> {
    let (incr, offsets) = shift_rule(kind, axis)?;
    let shifted = params.shifted(&incr);
    let new_lattices = kind.family().lattices(&shifted);
    for k in 0..2 {
        // x'(s − δ) − x(s) is constant when β' − β = 2δ
        let s0 = C::from(&offsets[k]);
        let c = &new_lattices[k].value(&-&s0) - &lattices[k].value(&C::zero());
        translate[k] = &translate[k] + &c;
    }
    Ok(shifted)
}

/// The base table with shifted parameters and arguments, written in the original lattice variables.
pub fn shifted_base(kind: TableKind, params: &Params, direction: Direction) -> Result<CoeffTable> {
    let lattices = kind.family().lattices(params);
    let mut translate = vec![C::zero(), C::zero()];
    let axes: &[usize] = match direction {
        Direction::X => &[0],
        Direction::Y => &[1],
        Direction::XY => &[1, 0],
    };
    let mut p = params.clone();
    let mut lat = lattices.clone();
    for &axis in axes {
        // offsets accumulate relative to the current lattice
        let mut step = vec![C::zero(), C::zero()];
        let next = shift_once(kind, &p, &lat, &mut step, axis)?;
        for k in 0..2 {
            translate[k] = &translate[k] + &step[k];
        }
        lat = kind.family().lattices(&next);
        p = next;
    }
    let t = coefficients(kind, &p)?;
    let suffix = match direction {
        Direction::X => "x",
        Direction::Y => "y",
        Direction::XY => "xy",
    };
    Ok(CoeffTable {
        name: format!("{}@shifted-{suffix}", kind.name()),
        lattices,
        coeffs: t
            .coeffs
            .into_iter()
            .map(|c| Coefficient { poly: c.poly.translate(&translate), ..c })
            .collect(),
        eigen: t.eigen,
    })
}

/// Coefficient-by-coefficient differences between two tables.
pub fn table_diff(a: &CoeffTable, b: &CoeffTable) -> Vec<String> {
    let mut out = Vec::new();
    for c in &a.coeffs {
        match b.by_index(&c.index.0) {
            Some(p) if *p == c.poly => {}
            Some(p) => out.push(format!("{} {}: {} vs {}", c.label, c.index, c.poly, p)),
            None => out.push(format!("{} {} missing", c.label, c.index)),
        }
    }
    if a.eigen != b.eigen {
        out.push(format!("eigenvalue: {:?} vs {:?}", a.eigen.0, b.eigen.0));
    }
    out
}

/// Degree structure of each coefficient against its operator order.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub label: String,
    pub operator: String,
    pub order: u32,
    pub total_degree: Option<u32>,
    pub spurious_variables: Vec<usize>,
}

impl DegreeReport {
    pub fn within_bound(&self) -> bool {
        self.total_degree.is_none_or(|d| d <= self.order) && self.spurious_variables.is_empty()
    }

    pub fn exact(&self) -> bool {
        self.within_bound() && self.total_degree == Some(self.order)
    }
}

pub fn degree_pattern(table: &CoeffTable) -> Vec<DegreeReport> {
    table
        .coeffs
        .iter()
        .map(|c| DegreeReport {
            label: c.label.clone(),
            operator: c.index.to_string(),
            order: c.index.order(),
            total_degree: c.poly.total_degree(),
            spurious_variables: (0..table.nvars()).filter(|&k| c.index.0[k] == 0 && c.poly.depends_on(k)).collect(),
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SecondOrderKind {
    RacahX,
    WilsonX,
    WilsonBarY,
    CdhX,
}

impl SecondOrderKind {
    pub const ALL: [SecondOrderKind; 4] =
        [SecondOrderKind::RacahX, SecondOrderKind::WilsonX, SecondOrderKind::WilsonBarY, SecondOrderKind::CdhX];

    pub fn family(self) -> Family {
        match self {
            SecondOrderKind::RacahX => Family::RacahBiv,
            SecondOrderKind::WilsonX => Family::WilsonBiv,
            SecondOrderKind::WilsonBarY => Family::WilsonBivBar,
            SecondOrderKind::CdhX => Family::CdhBiv,
        }
    }

    fn text(self) -> &'static tables::SecondOrderText {
        match self {
            SecondOrderKind::RacahX => &tables::RACAH_X_SECOND,
            SecondOrderKind::WilsonX => &tables::WILSON_X_SECOND,
            SecondOrderKind::WilsonBarY => &tables::WILSON_BAR_Y_SECOND,
            SecondOrderKind::CdhX => &tables::CDH_X_SECOND,
        }
    }

    pub fn axis(self) -> usize {
        match self {
            SecondOrderKind::WilsonBarY => 1,
            _ => 0,
        }
    }
}

impl FromStr for SecondOrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "racah-x" => Ok(SecondOrderKind::RacahX),
            "wilson-x" => Ok(SecondOrderKind::WilsonX),
            "wilson-bar-y" => Ok(SecondOrderKind::WilsonBarY),
            "cdh-x" => Ok(SecondOrderKind::CdhX),
            _ => Err(Error::Usage(format!("unknown second-order equation {s:?}"))),
        }
    }
}

/// φ·D²P + τ·S D P + λ·P along one axis.
pub fn second_order_residual(kind: SecondOrderKind, params: &Params, label: &[usize], point: &[C]) -> Result<C> {
    let spec = FamilySpec::new(kind.family(), params.clone())?;
    let tk = TableKind::for_family(kind.family());
    let text = kind.text();
    let phi = lattice_poly(tk, params, text.phi)?;
    let tau = lattice_poly(tk, params, text.tau)?;
    let mut b = Bindings::new(0);
    param_bindings(&mut b, params);
    b.scalar("n", C::from_int(label[0] as i64)).scalar("m", C::from_int(label[1] as i64));
    let eig = Formula::parse(text.eigen)?.eval_scalar(&b)?;
    let lattices = spec.lattices();
    let lv: Vec<C> = lattices.iter().zip(point).map(|(l, s)| l.value(s)).collect();
    let member = spec.member(label);
    let memo = Memo::new(|p: &[C]| member(p));
    let axis = kind.axis();
    let d2 = apply_chain(&lattices, &[OpStep { axis, op: Op::D }, OpStep { axis, op: Op::D }], &memo, point)?;
    let sd = apply_chain(&lattices, &[OpStep { axis, op: Op::S }, OpStep { axis, op: Op::D }], &memo, point)?;
    Ok(&(&(&phi.eval(&lv) * &d2) + &(&tau.eval(&lv) * &sd)) + &(&eig * &memo.eval(point)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DifferenceKind {
    RacahNinePoint,
    WilsonF,
    ChF,
}

impl FromStr for DifferenceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "racah" | "racah-nine-point" => Ok(DifferenceKind::RacahNinePoint),
            "wilson" => Ok(DifferenceKind::WilsonF),
            "ch" => Ok(DifferenceKind::ChF),
            _ => Err(Error::Usage(format!("unknown difference form {s:?}"))),
        }
    }
}

impl DifferenceKind {
    pub const ALL: [DifferenceKind; 3] = [DifferenceKind::RacahNinePoint, DifferenceKind::WilsonF, DifferenceKind::ChF];

    pub fn default_family(self) -> Family {
        match self {
            DifferenceKind::RacahNinePoint => Family::RacahBiv,
            DifferenceKind::WilsonF => Family::WilsonBiv,
            DifferenceKind::ChF => Family::ChBiv,
        }
    }
}

fn checked_ratio(num: &C, den: &C, what: &str) -> Result<C> {
    if den.is_zero() {
        return Err(Error::SingularPoint { lattice: what.to_string(), point: "denominator vanishes".into() });
    }
    num.checked_div(den)
}

/// Racah nine-point coefficients c_σ of P(s+σ), center included, eigenvalue excluded.
pub fn racah_stencil(params: &Params, point: &[C]) -> Result<Vec<([i64; 2], C)>> {
    let mut b = Bindings::new(0);
    param_bindings(&mut b, params);
    b.scalar("s", point[0].clone()).scalar("t", point[1].clone());
    let mut out = Vec::new();
    let mut center = C::zero();
    for (k, term) in tables::RACAH_NINE_POINT.iter().enumerate() {
        let num = Formula::parse(term.num)?.eval_scalar(&b)?;
        let den = Formula::parse(term.den)?.eval_scalar(&b)?;
        let c = checked_ratio(&num, &den, &format!("nine-point term {} factor {}", k + 1, term.den))?;
        center -= &c;
        out.push((term.shift, c));
    }
    out.push(([0, 0], center));
    Ok(out)
}

/// Wilson-form coefficients F1..F9 (F9 without the eigenvalue) from a table at a point.
fn wilson_form_coeffs(table: &CoeffTable, point: &[C]) -> Result<Vec<C>> {
    let lv = table.lattice_point(point);
    let mut b = Bindings::new(0);
    b.imaginary_unit().scalar("x", point[0].clone()).scalar("y", point[1].clone());
    for c in &table.coeffs {
        b.scalar(&c.label, c.poly.eval(&lv));
    }
    tables::WILSON_FORM
        .iter()
        .enumerate()
        .map(|(k, (num, den))| {
            let n = Formula::parse(num)?.eval_scalar(&b)?;
            let d = Formula::parse(den)?.eval_scalar(&b)?;
            checked_ratio(&n, &d, &format!("F{} factor {den}", k + 1))
        })
        .collect()
}

fn ch_form_coeffs(table: &CoeffTable, point: &[C], lambda: &C) -> Result<Vec<C>> {
    let lv = table.lattice_point(point);
    let mut b = Bindings::new(0);
    b.imaginary_unit().scalar("lambda", lambda.clone());
    for c in &table.coeffs {
        b.scalar(&c.label, c.poly.eval(&lv));
    }
    tables::CH_FORM.iter().map(|src| Formula::parse(src)?.eval_scalar(&b)).collect()
}

/// The nine-term stencil sum of a printed difference form.
pub fn difference_form_residual(kind: DifferenceKind, spec: &FamilySpec, label: &[usize], point: &[C]) -> Result<C> {
    let member = spec.member(label);
    let k = label.iter().sum::<usize>();
    let at = |sx: &C, sy: &C| member(&[&point[0] + sx, &point[1] + sy]);
    match kind {
        DifferenceKind::RacahNinePoint => {
            if TableKind::for_family(spec.family) != TableKind::Racah {
                return Err(Error::Usage("the nine-point form applies to the Racah families".into()));
            }
            let table = coefficients(TableKind::Racah, &spec.params)?;
            let mut acc = &table.eigenvalue(k) * &member(point)?;
            for (shift, c) in racah_stencil(&spec.params, point)? {
                acc += &(&c * &at(&C::from_int(shift[0]), &C::from_int(shift[1]))?);
            }
            Ok(acc)
        }
        DifferenceKind::WilsonF | DifferenceKind::ChF => {
            let tk = TableKind::for_family(spec.family);
            let table = coefficients(tk, &spec.params)?;
            let lambda = table.eigenvalue(k);
            let coeffs = if kind == DifferenceKind::WilsonF {
                if !matches!(tk, TableKind::Wilson | TableKind::Cdh) {
                    return Err(Error::Usage("the Wilson form applies to Wilson-type tables".into()));
                }
                let mut c = wilson_form_coeffs(&table, point)?;
                c[8] = &c[8] + &lambda;
                c
            } else {
                if tk != TableKind::Ch {
                    return Err(Error::Usage("the continuous Hahn form applies to the ch families".into()));
                }
                ch_form_coeffs(&table, point, &lambda)?
            };
            let i = C::i();
            let mut acc = C::zero();
            for (c, sh) in coeffs.iter().zip(tables::NINE_POINT_SHIFTS) {
                acc += &(c * &at(&i.scale(&Rational::from(sh[0])), &i.scale(&Rational::from(sh[1])))?);
            }
            Ok(acc)
        }
    }
}

/// Offsets {−1,0,1}^p, first axis slowest.
pub fn stencil_offsets(p: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..p {
        out = out
            .into_iter()
            .flat_map(|v| {
                [-1i64, 0, 1].into_iter().map(move |o| {
                    let mut w = v.clone();
                    w.push(o);
                    w
                })
            })
            .collect();
    }
    out
}

fn offset_point(lattices: &[LatticeSpec], point: &[C], offset: &[i64]) -> Vec<C> {
    point
        .iter()
        .zip(lattices)
        .zip(offset)
        .map(|((p, l), &o)| p + &l.half_step().scale(&Rational::from(2 * o)))
        .collect()
}

/// Row l, column σ: the weight of F(point + σ) in (E_l F)(point). Row 0 is the identity.
pub fn stencil_matrix(lattices: &[LatticeSpec], point: &[C]) -> Result<(Vec<MixedOpIndex>, ExactMatrix)> {
    let p = lattices.len();
    let mut ops = vec![MixedOpIndex(vec![0; p])];
    ops.extend(MixedOpIndex::all(p));
    let offs = stencil_offsets(p);
    let mut m = ExactMatrix::zeros(ops.len(), offs.len());
    for (j, o) in offs.iter().enumerate() {
        let target = offset_point(lattices, point, o);
        let indicator = |q: &[C]| Ok(if q == target.as_slice() { C::one() } else { C::zero() });
        for (i, op) in ops.iter().enumerate() {
            m[(i, j)] = apply_chain(lattices, &op.steps(), &indicator, point)?;
        }
    }
    Ok((ops, m))
}

/// Pointwise coefficients f_l solving Σ_l f_l E_l = Σ_σ c_σ shift_σ; entry 0 is the identity coefficient.
pub fn recover_at_point(lattices: &[LatticeSpec], point: &[C], stencil: &[(Vec<i64>, C)]) -> Result<(Vec<MixedOpIndex>, Vec<C>)> {
    let (ops, m) = stencil_matrix(lattices, point)?;
    let offs = stencil_offsets(lattices.len());
    let mut rhs = vec![C::zero(); offs.len()];
    for (o, c) in stencil {
        let j = offs.iter().position(|x| x == o).ok_or_else(|| Error::Usage(format!("offset {o:?} outside the stencil")))?;
        rhs[j] += c;
    }
    let f = m.transpose().solve_vec(&rhs)?;
    Ok((ops, f))
}

/// Pointwise coefficients from family members: rows are the labels {0,1,2}^p∖0.
pub fn recover_from_family(spec: &FamilySpec, point: &[C]) -> Result<(Vec<MixedOpIndex>, Vec<C>)> {
    let lattices = spec.lattices();
    let ops = MixedOpIndex::all(lattices.len());
    let mut a = ExactMatrix::zeros(ops.len(), ops.len());
    let mut rhs = Vec::with_capacity(ops.len());
    let table = coefficients(TableKind::for_family(spec.family), &spec.params)?;
    for (i, lab) in ops.iter().enumerate() {
        let label: Vec<usize> = lab.0.iter().map(|&v| v as usize).collect();
        let member = spec.member(&label);
        let memo = Memo::new(|p: &[C]| member(p));
        for (j, op) in ops.iter().enumerate() {
            a[(i, j)] = apply_chain(&lattices, &op.steps(), &memo, point)?;
        }
        rhs.push(-&(&table.eigenvalue(label.iter().sum()) * &memo.eval(point)?));
    }
    Ok((ops, a.solve_vec(&rhs)?))
}

/// One disagreement between a recovered and a printed coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub label: String,
    pub operator: String,
    pub printed: String,
    pub recovered: String,
}

#[derive(Clone, Debug)]
pub struct RecoveryReport {
    pub recovered: CoeffTable,
    pub mismatches: Vec<Mismatch>,
}

/// Distinct-lattice-value grid points avoiding the given singular test.
fn sample_axis(lattice: &LatticeSpec, count: usize, start: i64) -> Vec<C> {
    let off = crate::latticeops::default_offset();
    let mut seen: Vec<C> = Vec::new();
    let mut out = Vec::new();
    let mut k = start;
    while out.len() < count {
        let s = C::real(Rational::from(k) + off.clone());
        let v = lattice.value(&s);
        if !seen.contains(&v) {
            seen.push(v);
            out.push(s);
        }
        k += 1;
    }
    out
}

/// Rebuilds a bivariate Racah table from the nine-point form and compares it with the printed one.
pub fn recover_coefficients(params: &Params) -> Result<RecoveryReport> {
    let printed = coefficients(TableKind::Racah, params)?;
    let lattices = printed.lattices.clone();
    let per_axis = 5; // every coefficient has degree ≤ 4 in each lattice variable
    let mut start = 1;
    let values = loop {
        let axes: Vec<Vec<C>> = lattices.iter().map(|l| sample_axis(l, per_axis, start)).collect();
        let pts = crate::latticeops::tensor_grid(&axes);
        let mut vals: Vec<Vec<C>> = Vec::new();
        let mut ok = true;
        for p in &pts {
            let stencil: Vec<(Vec<i64>, C)> = match racah_stencil(params, p) {
                Ok(st) => st.into_iter().map(|(o, c)| (o.to_vec(), c)).collect(),
                Err(_) => {
                    ok = false;
                    break;
                }
            };
            match recover_at_point(&lattices, p, &stencil) {
                Ok((_, f)) => vals.push(f),
                Err(Error::SingularMatrix { .. }) | Err(Error::SingularPoint { .. }) => {
                    ok = false;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if ok {
            let lv_axes: Vec<Vec<C>> = axes.iter().zip(&lattices).map(|(a, l)| a.iter().map(|s| l.value(s)).collect()).collect();
            break (lv_axes, vals);
        }
        start += per_axis as i64;
        if start > 100 {
            return Err(Error::Degenerate("no nonsingular sample grid for the recovery".into()));
        }
    };
    let (lv_axes, vals) = values;
    let ops = {
        let mut o = vec![MixedOpIndex(vec![0, 0])];
        o.extend(MixedOpIndex::all(2));
        o
    };
    let mut coeffs = Vec::new();
    let mut mismatches = Vec::new();
    for (j, op) in ops.iter().enumerate() {
        let column: Vec<C> = vals.iter().map(|v| v[j].clone()).collect();
        let poly = interpolate_grid(&lv_axes, &column)?;
        if j == 0 {
            if !poly.is_zero() {
                mismatches.push(Mismatch {
                    label: "identity".into(),
                    operator: op.to_string(),
                    printed: "0".into(),
                    recovered: poly.to_string(),
                });
            }
            continue;
        }
        let pc = printed.coeffs.iter().find(|c| c.index == *op).expect("printed table covers every operator");
        if pc.poly != poly {
            mismatches.push(Mismatch {
                label: pc.label.clone(),
                operator: op.to_string(),
                printed: pc.poly.to_string(),
                recovered: poly.to_string(),
            });
        }
        coeffs.push(Coefficient { label: pc.label.clone(), index: op.clone(), poly });
    }
    coeffs.sort_by_key(|c| c.label[1..].parse::<usize>().unwrap_or(0));
    let recovered = CoeffTable { name: "racah/recovered".into(), lattices, coeffs, eigen: printed.eigen.clone() };
    Ok(RecoveryReport { recovered, mismatches })
}

/// Compares printed coefficients with values recovered from family members at each point.
pub fn family_recovery_mismatches(spec: &FamilySpec, points: &[Vec<C>]) -> Result<Vec<Mismatch>> {
    let table = coefficients(TableKind::for_family(spec.family), &spec.params)?;
    let mut out = Vec::new();
    for p in points {
        let (ops, vals) = recover_from_family(spec, p)?;
        let lv = table.lattice_point(p);
        for (op, v) in ops.iter().zip(vals) {
            let c = table.coeffs.iter().find(|c| c.index == *op).expect("table covers every operator");
            let printed = c.poly.eval(&lv);
            if printed != v {
                out.push(Mismatch {
                    label: c.label.clone(),
                    operator: format!("{op} at {p:?}"),
                    printed: printed.to_string(),
                    recovered: v.to_string(),
                });
            }
        }
    }
    Ok(out)
}

/// Applies D along `axis` to a stencil function.
pub fn difference_of<'a>(lattices: &'a [LatticeSpec], axis: usize, f: &'a dyn StencilFunction) -> impl Fn(&[C]) -> Result<C> + 'a {
    move |p: &[C]| apply(&lattices[axis], axis, Op::D, f, p)
}
