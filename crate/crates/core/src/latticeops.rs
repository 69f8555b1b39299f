//! Lattices and the divided-difference / averaging operator pairs.
//!
//! Every lattice here has the shape X(s ± h) = X(s) + c ± u(s) with
//! u² = αX + γ, so the operators act on polynomials in X through the
//! binomial expansion in u and pointwise through shifted evaluation.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{binomial, Rational, C};
use crate::poly::MultiPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    /// x(s) = s(s+β), real half shifts.
    Quadratic(Rational),
    /// x², imaginary half shifts, denominator 2ix.
    WilsonSquare,
    /// x, imaginary half shifts, denominator i.
    Linear,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeSpec {
    pub kind: LatticeKind,
    pub variable: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    D,
    S,
}

impl fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            LatticeKind::Quadratic(b) => write!(f, "quadratic(beta={b}) in {}", self.variable),
            LatticeKind::WilsonSquare => write!(f, "wilson-square in {}", self.variable),
            LatticeKind::Linear => write!(f, "linear in {}", self.variable),
        }
    }
}

impl LatticeSpec {
    pub fn quadratic(beta: Rational, variable: &str) -> Self {
        LatticeSpec { kind: LatticeKind::Quadratic(beta), variable: variable.into() }
    }

    pub fn wilson(variable: &str) -> Self {
        LatticeSpec { kind: LatticeKind::WilsonSquare, variable: variable.into() }
    }

    pub fn linear(variable: &str) -> Self {
        LatticeSpec { kind: LatticeKind::Linear, variable: variable.into() }
    }

    pub fn value(&self, s: &C) -> C {
        match &self.kind {
            LatticeKind::Quadratic(b) => s * &(s + &C::from(b)),
            LatticeKind::WilsonSquare => s * s,
            LatticeKind::Linear => s.clone(),
        }
    }

    pub fn half_step(&self) -> C {
        match self.kind {
            LatticeKind::Quadratic(_) => C::frac(1, 2),
            _ => C::i().scale(&Rational::frac(1, 2)),
        }
    }

    /// X(s+h) − X(s−h), the denominator of the divided difference.
    pub fn increment(&self, s: &C) -> C {
        match &self.kind {
            LatticeKind::Quadratic(b) => &s.scale(&Rational::from(2)) + &C::from(b),
            LatticeKind::WilsonSquare => &C::i().scale(&Rational::from(2)) * s,
            LatticeKind::Linear => C::i(),
        }
    }

    /// The constant c in X(s±h) = X + c ± u.
    pub fn shift_constant(&self) -> Rational {
        match self.kind {
            LatticeKind::Quadratic(_) => Rational::frac(1, 4),
            LatticeKind::WilsonSquare => Rational::frac(-1, 4),
            LatticeKind::Linear => Rational::zero(),
        }
    }

    /// (α, γ) with u² = αX + γ.
    pub fn u_squared(&self) -> (Rational, Rational) {
        match &self.kind {
            LatticeKind::Quadratic(b) => (Rational::one(), b * b / 4),
            LatticeKind::WilsonSquare => (Rational::from(-1), Rational::zero()),
            LatticeKind::Linear => (Rational::zero(), Rational::frac(-1, 4)),
        }
    }

    /// κ in DS = SD + κD² and S² = κSD + U·D² + I.
    pub fn kappa(&self) -> Rational {
        self.shift_constant() * 2
    }

    /// U = u² as a polynomial in variable `k` of an `nvars`-variate ring.
    pub fn u_squared_poly(&self, nvars: usize, k: usize) -> MultiPoly {
        let (a, g) = self.u_squared();
        &MultiPoly::var(nvars, k).scale(&C::from(a)) + &MultiPoly::constant(nvars, C::from(g))
    }

    fn singular(&self, s: &C) -> Error {
        Error::SingularPoint { lattice: self.to_string(), point: s.to_string() }
    }
}

/// A function of a tuple of exact points.
pub trait StencilFunction {
    fn eval(&self, point: &[C]) -> Result<C>;
}

impl<F> StencilFunction for F
where
    F: Fn(&[C]) -> Result<C>,
{
    fn eval(&self, point: &[C]) -> Result<C> {
        self(point)
    }
}

/// Caches evaluations of the wrapped function by point.
pub struct Memo<F> {
    inner: F,
    cache: RefCell<HashMap<Vec<C>, C>>,
}

impl<F: StencilFunction> Memo<F> {
    pub fn new(inner: F) -> Self {
        Memo { inner, cache: RefCell::new(HashMap::new()) }
    }
}

impl<F: StencilFunction> StencilFunction for Memo<F> {
    fn eval(&self, point: &[C]) -> Result<C> {
        if let Some(v) = self.cache.borrow().get(point) {
            return Ok(v.clone());
        }
        let v = self.inner.eval(point)?;
        self.cache.borrow_mut().insert(point.to_vec(), v.clone());
        Ok(v)
    }
}

/// One operator acting on one coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpStep {
    pub axis: usize,
    pub op: Op,
}

fn shifted(point: &[C], axis: usize, delta: &C) -> Vec<C> {
    let mut p = point.to_vec();
    p[axis] = &p[axis] + delta;
    p
}

/// Applies `op` along `axis` of a multivariate stencil function.
pub fn apply(lattice: &LatticeSpec, axis: usize, op: Op, f: &dyn StencilFunction, point: &[C]) -> Result<C> {
    let h = lattice.half_step();
    match op {
        Op::D => {
            let den = lattice.increment(&point[axis]);
            if den.is_zero() {
                return Err(lattice.singular(&point[axis]));
            }
            let plus = f.eval(&shifted(point, axis, &h))?;
            let minus = f.eval(&shifted(point, axis, &-&h))?;
            (&plus - &minus).checked_div(&den)
        }
        Op::S => {
            let plus = f.eval(&shifted(point, axis, &h))?;
            let minus = f.eval(&shifted(point, axis, &-&h))?;
            Ok((&plus + &minus).scale(&Rational::frac(1, 2)))
        }
    }
}

/// Univariate divided difference at `s`.
pub fn apply_d(lattice: &LatticeSpec, f: &dyn StencilFunction, s: &C) -> Result<C> {
    apply(lattice, 0, Op::D, f, std::slice::from_ref(s))
}

/// Univariate averaging operator at `s`.
pub fn apply_s(lattice: &LatticeSpec, f: &dyn StencilFunction, s: &C) -> Result<C> {
    apply(lattice, 0, Op::S, f, std::slice::from_ref(s))
}

/// Applies `steps[0] ∘ steps[1] ∘ ... ∘ f` at `point`; `lattices[axis]` gives each coordinate's lattice.
pub fn apply_chain(lattices: &[LatticeSpec], steps: &[OpStep], f: &dyn StencilFunction, point: &[C]) -> Result<C> {
    match steps.split_first() {
        None => f.eval(point),
        Some((first, rest)) => {
            let inner = |p: &[C]| apply_chain(lattices, rest, f, p);
            apply(&lattices[first.axis], first.axis, first.op, &inner, point)
        }
    }
}

/// Symbolic action of `op` on a polynomial in the lattice variable `axis`.
pub fn poly_apply(lattice: &LatticeSpec, axis: usize, op: Op, p: &MultiPoly) -> MultiPoly {
    let nv = p.nvars();
    let x = MultiPoly::var(nv, axis);
    let xc = &x + &MultiPoly::constant(nv, C::from(lattice.shift_constant()));
    let u2 = lattice.u_squared_poly(nv, axis);
    // X^j ↦ Σ_r C(j,r) (X+c)^{j−r} u^r over odd r (D, after dividing by 2u) or even r (S, after halving)
    p.map_powers(axis, |j| {
        let mut img = MultiPoly::zero(nv);
        let start = match op {
            Op::D => 1,
            Op::S => 0,
        };
        let mut r = start;
        while r <= j {
            let term = &xc.pow(j - r) * &u2.pow(r / 2);
            img = &img + &term.scale(&C::from(binomial(j as usize, r as usize)));
            r += 2;
        }
        img
    })
}

/// Symbolic application of a chain of steps (outermost first).
pub fn poly_apply_chain(lattices: &[LatticeSpec], steps: &[OpStep], p: &MultiPoly) -> MultiPoly {
    steps
        .iter()
        .rev()
        .fold(p.clone(), |acc, st| poly_apply(&lattices[st.axis], st.axis, st.op, &acc))
}

/// Grid coordinates s = k + offset for k = 1..=count.
pub fn grid(count: usize, offset: &Rational) -> Vec<C> {
    (1..=count as i64).map(|k| C::real(Rational::from(k) + offset)).collect()
}

/// The default grid offset.
pub fn default_offset() -> Rational {
    Rational::frac(1, 7)
}

/// Cartesian product of per-axis coordinate lists.
pub fn tensor_grid(axes: &[Vec<C>]) -> Vec<Vec<C>> {
    let mut out: Vec<Vec<C>> = vec![Vec::new()];
    for axis in axes {
        out = out
            .into_iter()
            .flat_map(|p| {
                axis.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    out
}
