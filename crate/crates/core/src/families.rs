//! Univariate hypergeometric families and their bivariate/trivariate products.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactfield::{pochhammer, Rational, C};
use crate::latticeops::{apply, LatticeSpec, Op, StencilFunction};

/// Σ_{k≤n} (−n)_k Π(upper)_k / (Π(lower)_k k!), multiplied by Π(lower)_n.
///
/// Fails when a lower Pochhammer factor vanishes before the series truncates.
pub fn normalized_terminating(n: usize, upper: &[C], lower: &[C]) -> Result<C> {
    let mut term = C::one();
    let mut sum = C::one();
    let nn = C::from_int(n as i64);
    for k in 0..n {
        let kk = C::from_int(k as i64);
        let mut num = &kk - &nn;
        for u in upper {
            num = &num * &(u + &kk);
        }
        let mut den = C::from_int(k as i64 + 1);
        for l in lower {
            let f = l + &kk;
            if f.is_zero() {
                return Err(Error::Degenerate(format!(
                    "hypergeometric denominator parameter {l} hits zero at index {k} (degree {n})"
                )));
            }
            den = &den * &f;
        }
        term = &term * &num.checked_div(&den)?;
        sum += &term;
    }
    let prefactor: C = lower.iter().map(|l| pochhammer(l, n)).product();
    Ok(&prefactor * &sum)
}

/// r_n(α,β,γ,δ; s)
pub fn racah_uni(n: usize, alpha: &C, beta: &C, gamma: &C, delta: &C, s: &C) -> Result<C> {
    let one = C::one();
    let nn = C::from_int(n as i64);
    let upper = [&(&(&nn + alpha) + beta) + &one, -s, &(&(s + gamma) + delta) + &one];
    let lower = [alpha + &one, &(beta + delta) + &one, gamma + &one];
    normalized_terminating(n, &upper, &lower)
}

/// w_n(x²; a,b,c,d)
pub fn wilson_uni(n: usize, a: &C, b: &C, c: &C, d: &C, x: &C) -> Result<C> {
    let ix = &C::i() * x;
    let nn = C::from_int(n as i64);
    let upper = [&(&(&(&nn + a) + b) + &(c + d)) - &C::one(), a + &ix, a - &ix];
    let lower = [a + b, a + c, a + d];
    normalized_terminating(n, &upper, &lower)
}

/// d_n(a,b,c | x)
pub fn cdh_uni(n: usize, a: &C, b: &C, c: &C, x: &C) -> Result<C> {
    let ix = &C::i() * x;
    let upper = [a + &ix, a - &ix];
    let lower = [a + b, a + c];
    normalized_terminating(n, &upper, &lower)
}

/// h_n(a,b,c,d | x), including the iⁿ prefactor.
pub fn ch_uni(n: usize, a: &C, b: &C, c: &C, d: &C, x: &C) -> Result<C> {
    let ix = &C::i() * x;
    let nn = C::from_int(n as i64);
    let upper = [&(&(&(&nn + a) + b) + &(c + d)) - &C::one(), a + &ix];
    let lower = [a + b, a + d];
    Ok(&C::i_pow(n) * &normalized_terminating(n, &upper, &lower)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    RacahBiv,
    RacahBivBar,
    WilsonBiv,
    WilsonBivBar,
    CdhBiv,
    ChBiv,
    ChBivBar,
    ChTri,
}

/// Parameter set shared by the bivariate families of one kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamKind {
    Racah,
    Wilson,
    Cdh,
    Ch,
    ChTri,
}

impl ParamKind {
    pub fn names(self) -> &'static [&'static str] {
        match self {
            ParamKind::Racah => &["b0", "b1", "b2", "b3", "N"],
            ParamKind::Wilson => &["a", "b", "c", "d", "e2"],
            ParamKind::Cdh => &["a", "b", "c", "e2"],
            ParamKind::Ch => &["a1", "e2", "a3", "b1", "b3"],
            ParamKind::ChTri => &["a1", "e2", "e3", "a4", "b1", "b4"],
        }
    }

    pub fn defaults(self) -> Params {
        let v: Vec<Rational> = match self {
            ParamKind::Racah => vec![(1, 5), (2, 3), (7, 3), (9, 2), (17, 2)],
            ParamKind::Wilson => vec![(1, 2), (3, 4), (5, 4), (7, 6), (2, 5)],
            ParamKind::Cdh => vec![(1, 2), (3, 4), (5, 4), (2, 5)],
            ParamKind::Ch => vec![(1, 3), (2, 7), (3, 5), (5, 6), (4, 9)],
            ParamKind::ChTri => vec![(1, 3), (2, 7), (1, 2), (3, 7), (5, 6), (5, 11)],
        }
        .into_iter()
        .map(|(p, q)| Rational::frac(p, q))
        .collect();
        Params { kind: self, values: v }
    }
}

/// Named exact parameters of one family kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    kind: ParamKind,
    values: Vec<Rational>,
}

impl Params {
    pub fn kind(&self) -> ParamKind {
        self.kind
    }

    pub fn new(kind: ParamKind, values: Vec<Rational>) -> Result<Self> {
        if values.len() != kind.names().len() {
            return Err(Error::Usage(format!(
                "{kind:?} needs {} parameters, got {}",
                kind.names().len(),
                values.len()
            )));
        }
        Ok(Params { kind, values })
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.kind
            .names()
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| Error::Usage(format!("unknown parameter {name:?} for {:?}", self.kind)))
    }

    pub fn get(&self, name: &str) -> &Rational {
        let k = self.index(name).expect("parameter name");
        &self.values[k]
    }

    pub fn c(&self, name: &str) -> C {
        C::from(self.get(name))
    }

    pub fn set(&mut self, name: &str, value: Rational) -> Result<()> {
        let k = self.index(name)?;
        self.values[k] = value;
        Ok(())
    }

    /// Copy with `name` increased by `delta`.
    pub fn shifted(&self, changes: &[(&str, Rational)]) -> Self {
        let mut p = self.clone();
        for (name, delta) in changes {
            let k = p.index(name).expect("parameter name");
            p.values[k] = &p.values[k] + delta;
        }
        p
    }

    pub fn entries(&self) -> impl Iterator<Item = (&'static str, &Rational)> {
        self.kind.names().iter().copied().zip(self.values.iter())
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = ser.serialize_map(Some(self.values.len()))?;
        for (k, v) in self.entries() {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::RacahBiv,
        Family::RacahBivBar,
        Family::WilsonBiv,
        Family::WilsonBivBar,
        Family::CdhBiv,
        Family::ChBiv,
        Family::ChBivBar,
        Family::ChTri,
    ];

    pub fn param_kind(self) -> ParamKind {
        match self {
            Family::RacahBiv | Family::RacahBivBar => ParamKind::Racah,
            Family::WilsonBiv | Family::WilsonBivBar => ParamKind::Wilson,
            Family::CdhBiv => ParamKind::Cdh,
            Family::ChBiv | Family::ChBivBar => ParamKind::Ch,
            Family::ChTri => ParamKind::ChTri,
        }
    }

    pub fn arity(self) -> usize {
        if self == Family::ChTri {
            3
        } else {
            2
        }
    }

    /// Lattices of the coordinates, in order.
    pub fn lattices(self, params: &Params) -> Vec<LatticeSpec> {
        match self.param_kind() {
            ParamKind::Racah => vec![
                LatticeSpec::quadratic(params.get("b1").clone(), "s"),
                LatticeSpec::quadratic(params.get("b2").clone(), "t"),
            ],
            ParamKind::Wilson | ParamKind::Cdh => vec![LatticeSpec::wilson("x"), LatticeSpec::wilson("y")],
            ParamKind::Ch => vec![LatticeSpec::linear("x"), LatticeSpec::linear("y")],
            ParamKind::ChTri => vec![LatticeSpec::linear("x"), LatticeSpec::linear("y"), LatticeSpec::linear("z")],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::RacahBiv => "racah",
            Family::RacahBivBar => "racah-bar",
            Family::WilsonBiv => "wilson",
            Family::WilsonBivBar => "wilson-bar",
            Family::CdhBiv => "cdh",
            Family::ChBiv => "ch",
            Family::ChBivBar => "ch-bar",
            Family::ChTri => "ch-tri",
        }
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Params,
}

impl FamilySpec {
    pub fn new(family: Family, params: Params) -> Result<Self> {
        if params.kind() != family.param_kind() {
            return Err(Error::Usage(format!("{family} needs {:?} parameters", family.param_kind())));
        }
        Ok(FamilySpec { family, params })
    }

    pub fn with_defaults(family: Family) -> Self {
        FamilySpec { family, params: family.param_kind().defaults() }
    }

    pub fn lattices(&self) -> Vec<LatticeSpec> {
        self.family.lattices(&self.params)
    }

    pub fn eval(&self, label: &[usize], point: &[C]) -> Result<C> {
        eval(self, label, point)
    }

    /// Rejects parameters for which some member of total degree ≤ `max_degree` hits a
    /// vanishing hypergeometric denominator. Point-dependent denominators are probed
    /// at a fixed generic point.
    pub fn validate(&self, max_degree: usize) -> Result<()> {
        let probe: Vec<C> = [(37, 101), (59, 103), (71, 107)][..self.family.arity()]
            .iter()
            .map(|&(p, q)| C::frac(p, q))
            .collect();
        for label in labels_up_to(self.family.arity(), max_degree) {
            eval(self, &label, &probe).map_err(|e| match e {
                Error::Degenerate(msg) => Error::Degenerate(format!("{} at degree {label:?}: {msg}", self.family)),
                other => other,
            })?;
        }
        Ok(())
    }

    /// The family member as a stencil function of its coordinates.
    pub fn member<'a>(&'a self, label: &'a [usize]) -> impl Fn(&[C]) -> Result<C> + 'a {
        move |p: &[C]| eval(self, label, p)
    }
}

/// Degree labels of `arity` entries with total ≤ `max_degree`, in lexicographic order.
pub fn labels_up_to(arity: usize, max_degree: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|l| {
                let used: usize = l.iter().sum();
                (0..=max_degree - used).map(move |k| {
                    let mut m = l.clone();
                    m.push(k);
                    m
                })
            })
            .collect();
    }
    out
}

fn check_arity(spec: &FamilySpec, label: &[usize], point: &[C]) -> Result<()> {
    let k = spec.family.arity();
    if label.len() != k || point.len() != k {
        return Err(Error::Usage(format!(
            "{} takes {k} degrees and {k} coordinates, got {} and {}",
            spec.family,
            label.len(),
            point.len()
        )));
    }
    Ok(())
}

fn int(n: usize) -> C {
    C::from_int(n as i64)
}

/// Value of a family member at a point.
pub fn eval(spec: &FamilySpec, label: &[usize], point: &[C]) -> Result<C> {
    check_arity(spec, label, point)?;
    let p = &spec.params;
    let one = C::one();
    let i = C::i();
    match spec.family {
        Family::RacahBiv => {
            let (n, m) = (label[0], label[1]);
            let (s, t) = (&point[0], &point[1]);
            let (b0, b1, b2, b3, nn) = (p.c("b0"), p.c("b1"), p.c("b2"), p.c("b3"), p.c("N"));
            let first = racah_uni(n, &(&(&b1 - &b0) - &one), &(&(&b2 - &b1) - &one), &(&-t - &one), &(&b1 + t), s)?;
            let second = racah_uni(
                m,
                &(&(&(&int(2 * n) + &b2) - &b0) - &one),
                &(&(&b3 - &b2) - &one),
                &(&(&int(n) - &nn) - &one),
                &(&(&int(n) + &b2) + &nn),
                &(t - &int(n)),
            )?;
            Ok(&first * &second)
        }
        Family::RacahBivBar => {
            let (n, m) = (label[0], label[1]);
            let (s, t) = (&point[0], &point[1]);
            let (b0, b1, b2, b3, nn) = (p.c("b0"), p.c("b1"), p.c("b2"), p.c("b3"), p.c("N"));
            let mm = int(m);
            let first = racah_uni(
                n,
                &(&(&(&int(2 * m) - &b1) + &b3) - &one),
                &(&(&b1 - &b0) - &one),
                &(&(&mm - &nn) - &one),
                &(&(&mm - &nn) - &b1),
                &(&(&nn - &mm) - s),
            )?;
            let second = racah_uni(
                m,
                &(&(&b3 - &b2) - &one),
                &(&(&b2 - &b1) - &one),
                &(&(s - &nn) - &one),
                &(&(&-&b2 - &nn) - s),
                &(&nn - t),
            )?;
            Ok(&first * &second)
        }
        Family::WilsonBiv => {
            let (n, m) = (label[0], label[1]);
            let (x, y) = (&point[0], &point[1]);
            let (a, b, c, d, e2) = (p.c("a"), p.c("b"), p.c("c"), p.c("d"), p.c("e2"));
            let iy = &i * y;
            let first = wilson_uni(n, &a, &b, &(&e2 + &iy), &(&e2 - &iy), x)?;
            let shift = &int(n) + &e2;
            let second = wilson_uni(m, &(&shift + &a), &(&shift + &b), &c, &d, y)?;
            Ok(&first * &second)
        }
        Family::WilsonBivBar => {
            let (n, m) = (label[0], label[1]);
            let (x, y) = (&point[0], &point[1]);
            let (a, b, c, d, e2) = (p.c("a"), p.c("b"), p.c("c"), p.c("d"), p.c("e2"));
            let ix = &i * x;
            let shift = &int(m) + &e2;
            let first = wilson_uni(n, &(&shift + &c), &(&shift + &d), &a, &b, x)?;
            let second = wilson_uni(m, &c, &d, &(&e2 + &ix), &(&e2 - &ix), y)?;
            Ok(&first * &second)
        }
        Family::CdhBiv => {
            let (n, m) = (label[0], label[1]);
            let (x, y) = (&point[0], &point[1]);
            let (a, b, c, e2) = (p.c("a"), p.c("b"), p.c("c"), p.c("e2"));
            let iy = &i * y;
            let first = cdh_uni(n, &a, &(&e2 + &iy), &(&e2 - &iy), x)?;
            let second = cdh_uni(m, &(&(&int(n) + &a) + &e2), &b, &c, y)?;
            Ok(&first * &second)
        }
        Family::ChBiv => {
            let (n, m) = (label[0], label[1]);
            let (x, y) = (&point[0], &point[1]);
            let (a1, e2, a3, b1, b3) = (p.c("a1"), p.c("e2"), p.c("a3"), p.c("b1"), p.c("b3"));
            let iy = &i * y;
            let first = ch_uni(n, &a1, &b1, &(&e2 - &iy), &(&e2 + &iy), x)?;
            let shift = &int(n) + &e2;
            let second = ch_uni(m, &(&shift + &a1), &(&shift + &b1), &b3, &a3, y)?;
            Ok(&first * &second)
        }
        Family::ChBivBar => {
            let (n, m) = (label[0], label[1]);
            let (x, y) = (&point[0], &point[1]);
            let (a1, e2, a3, b1, b3) = (p.c("a1"), p.c("e2"), p.c("a3"), p.c("b1"), p.c("b3"));
            let ix = &i * x;
            let shift = &int(m) + &e2;
            let first = ch_uni(n, &(&shift + &b3), &(&shift + &a3), &a1, &b1, x)?;
            let second = ch_uni(m, &b3, &a3, &(&e2 - &ix), &(&e2 + &ix), y)?;
            Ok(&first * &second)
        }
        Family::ChTri => {
            let (n, m, r) = (label[0], label[1], label[2]);
            let (x, y, z) = (&point[0], &point[1], &point[2]);
            let (a1, e2, e3, a4, b1, b4) = (p.c("a1"), p.c("e2"), p.c("e3"), p.c("a4"), p.c("b1"), p.c("b4"));
            let iy = &i * y;
            let iz = &i * z;
            let first = ch_uni(n, &a1, &b1, &(&e2 - &iy), &(&e2 + &iy), x)?;
            let s2 = &int(n) + &e2;
            let second = ch_uni(m, &(&s2 + &a1), &(&s2 + &b1), &(&e3 - &iz), &(&e3 + &iz), y)?;
            let s3 = &(&int(n + m) + &e2) + &e3;
            let third = ch_uni(r, &(&s3 + &a1), &(&s3 + &b1), &b4, &a4, z)?;
            Ok(&(&first * &second) * &third)
        }
    }
}

/// The printed first-order ladder identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ladder {
    RacahX,
    RacahBarY,
    WilsonX,
    WilsonBarY,
    CdhX,
    ChX,
    ChBarY,
}

impl Ladder {
    pub const ALL: [Ladder; 7] = [
        Ladder::RacahX,
        Ladder::RacahBarY,
        Ladder::WilsonX,
        Ladder::WilsonBarY,
        Ladder::CdhX,
        Ladder::ChX,
        Ladder::ChBarY,
    ];

    pub fn family(self) -> Family {
        match self {
            Ladder::RacahX => Family::RacahBiv,
            Ladder::RacahBarY => Family::RacahBivBar,
            Ladder::WilsonX => Family::WilsonBiv,
            Ladder::WilsonBarY => Family::WilsonBivBar,
            Ladder::CdhX => Family::CdhBiv,
            Ladder::ChX => Family::ChBiv,
            Ladder::ChBarY => Family::ChBivBar,
        }
    }

    /// The coordinate the difference operator acts on.
    pub fn axis(self) -> usize {
        match self {
            Ladder::RacahX | Ladder::WilsonX | Ladder::CdhX | Ladder::ChX => 0,
            _ => 1,
        }
    }
}

fn half() -> Rational {
    Rational::frac(1, 2)
}

/// LHS − RHS of the ladder identity at a point.
pub fn derivative_ladder_check(ladder: Ladder, params: &Params, label: &[usize], point: &[C]) -> Result<C> {
    let spec = FamilySpec::new(ladder.family(), params.clone())?;
    check_arity(&spec, label, point)?;
    let axis = ladder.axis();
    let lattices = spec.lattices();
    let f = spec.member(label);
    let lhs = apply(&lattices[axis], axis, Op::D, &f as &dyn StencilFunction, point)?;
    let k = label[axis];
    if k == 0 {
        return Ok(lhs);
    }
    let mut lower = label.to_vec();
    lower[axis] -= 1;
    let kk = C::from_int(k as i64);
    let km1 = C::from_int(k as i64 - 1);
    let p = params;
    let one = Rational::one();
    let two = Rational::from(2);
    let (factor, shifted, at): (C, Params, Vec<C>) = match ladder {
        Ladder::RacahX => (
            &kk * &(&(&kk - &p.c("b0")) + &(&p.c("b2") - &C::one())),
            p.shifted(&[("b1", one.clone()), ("b2", two.clone()), ("b3", two.clone()), ("N", -one.clone())]),
            vec![&point[0] - &C::from(half()), &point[1] - &C::one()],
        ),
        Ladder::RacahBarY => (
            &kk * &(&(&kk + &p.c("b3")) - &(&p.c("b1") + &C::one())),
            p.shifted(&[("b2", one.clone()), ("b3", two.clone()), ("N", -one.clone())]),
            vec![point[0].clone(), &point[1] - &C::from(half())],
        ),
        Ladder::WilsonX => (
            -&(&kk * &(&(&km1 + &p.c("a")) + &(&p.c("b") + &p.c("e2").scale(&two)))),
            p.shifted(&[("a", half()), ("b", half()), ("e2", half())]),
            point.to_vec(),
        ),
        Ladder::WilsonBarY => (
            -&(&kk * &(&(&km1 + &p.c("c")) + &(&p.c("d") + &p.c("e2").scale(&two)))),
            p.shifted(&[("c", half()), ("d", half()), ("e2", half())]),
            point.to_vec(),
        ),
        Ladder::CdhX => (-kk.clone(), p.shifted(&[("a", half()), ("e2", half())]), point.to_vec()),
        Ladder::ChX => (
            &kk * &(&(&km1 + &p.c("a1")) + &(&p.c("b1") + &p.c("e2").scale(&two))),
            p.shifted(&[("a1", half()), ("e2", half()), ("b1", half())]),
            point.to_vec(),
        ),
        Ladder::ChBarY => (
            &kk * &(&(&km1 + &p.c("a3")) + &(&p.c("b3") + &p.c("e2").scale(&two))),
            p.shifted(&[("e2", half()), ("a3", half()), ("b3", half())]),
            point.to_vec(),
        ),
    };
    let rhs_spec = FamilySpec::new(ladder.family(), shifted)?;
    let rhs = &factor * &eval(&rhs_spec, &lower, &at)?;
    Ok(&lhs - &rhs)
}

/// Tratnik parameters (a₁, a₂, a₃, γ, η) of the bivariate Racah polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TratnikParams {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub gamma: Rational,
    pub eta: Rational,
}

impl TratnikParams {
    pub fn to_racah(&self) -> Params {
        let one = Rational::one();
        Params {
            kind: ParamKind::Racah,
            values: vec![
                &(&self.a1 - &self.eta) - &one,
                self.a1.clone(),
                &self.a1 + &self.a2,
                &(&self.a1 + &self.a2) + &self.a3,
                -&self.gamma - &one,
            ],
        }
    }

    pub fn from_racah(p: &Params) -> Self {
        let one = Rational::one();
        TratnikParams {
            a1: p.get("b1").clone(),
            a2: p.get("b2") - p.get("b1"),
            a3: p.get("b3") - p.get("b2"),
            gamma: -p.get("N") - &one,
            eta: &(p.get("b1") - p.get("b0")) - &one,
        }
    }
}

/// Racah parameters and point obtained from Wilson ones by the change of variables
/// β₀=a−b, β₁=2a, β₂=2a+2e₂, β₃=2a+2e₂+c+d, s=−a+ix, t=−a−e₂+iy, N=−a−d−e₂.
pub fn racah_from_wilson(w: &Params, x: &C, y: &C) -> (Params, [C; 2]) {
    let (a, b, c, d, e2) = (w.get("a"), w.get("b"), w.get("c"), w.get("d"), w.get("e2"));
    let two = Rational::from(2);
    let b1 = &two * a;
    let b2 = &b1 + &(&two * e2);
    let values = vec![a - b, b1, b2.clone(), &(&b2 + c) + d, -&(&(a + d) + e2)];
    let s = &-C::from(a) + &(&C::i() * x);
    let t = &-C::from(a + e2) + &(&C::i() * y);
    (Params { kind: ParamKind::Racah, values }, [s, t])
}
