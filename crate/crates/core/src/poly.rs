//! Sparse multivariate and dense univariate polynomials over Q(i).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactfield::{binomial, Rational, C};

/// Dense univariate polynomial, lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly(pub Vec<C>);

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn constant(c: C) -> Self {
        UniPoly(vec![c]).trimmed()
    }

    /// x + c
    pub fn linear(c: C) -> Self {
        UniPoly(vec![c, C::one()])
    }

    pub fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    pub fn coeff(&self, k: usize) -> C {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.0.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UniPoly::constant(C::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        UniPoly(self.0.iter().map(|a| a * c).collect()).trimmed()
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.0.len().max(rhs.0.len());
        UniPoly((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect()).trimmed()
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.0.len().max(rhs.0.len());
        UniPoly((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect()).trimmed()
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly(out).trimmed()
    }
}

/// Sparse polynomial in `nvars` variables; exponent vectors map to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self::monomial(e, C::one())
    }

    pub fn monomial(exps: Vec<u32>, c: C) -> Self {
        let nvars = exps.len();
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent arity");
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// The constant value, if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&vec![0; self.nvars]).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &C) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, k: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[k]).max()
    }

    pub fn depends_on(&self, k: usize) -> bool {
        self.terms.keys().any(|e| e[k] > 0)
    }

    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars, "point arity");
        let mut powers: Vec<Vec<C>> = Vec::with_capacity(self.nvars);
        for (k, x) in point.iter().enumerate() {
            let maxe = self.degree_in(k).unwrap_or(0) as usize;
            let mut pw = Vec::with_capacity(maxe + 1);
            pw.push(C::one());
            for j in 1..=maxe {
                let next = &pw[j - 1] * x;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &ek) in e.iter().enumerate() {
                if ek > 0 {
                    t = &t * &powers[k][ek as usize];
                }
            }
            acc += &t;
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces every power `x_k^j` by `image(j)`, a polynomial in the same variables.
    pub fn map_powers(&self, k: usize, mut image: impl FnMut(u32) -> MultiPoly) -> Self {
        let mut cache: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let j = e[k];
            let img = cache.entry(j).or_insert_with(|| image(j));
            let mut rest = e.clone();
            rest[k] = 0;
            let mono = MultiPoly::monomial(rest, c.clone());
            out = &out + &(&mono * &*img);
        }
        out
    }

    /// p(x_1 + a_1, ..., x_n + a_n)
    pub fn translate(&self, shifts: &[C]) -> Self {
        let mut p = self.clone();
        for (k, a) in shifts.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let nv = self.nvars;
            p = p.map_powers(k, |j| {
                let mut img = MultiPoly::zero(nv);
                for r in 0..=j {
                    let mut e = vec![0; nv];
                    e[k] = r;
                    let c = a.pow(j - r).scale(&binomial(j as usize, r as usize));
                    img.add_term(e, &c);
                }
                img
            });
        }
        p
    }

    /// Substitutes x_k -> x_k^2 (used to pass from lattice variables to raw variables).
    pub fn square_var(&self, k: usize) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[k] *= 2;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Inverse of `square_var`; `None` if an odd power of x_k occurs.
    pub fn unsquare_var(&self, k: usize) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[k] % 2 == 1 {
                return None;
            }
            let mut e = e.clone();
            e[k] /= 2;
            terms.insert(e, c.clone());
        }
        Some(MultiPoly { nvars: self.nvars, terms })
    }

    /// Univariate view in the given variable; requires all other exponents zero.
    pub fn to_uni(&self, k: usize) -> Option<UniPoly> {
        let mut coeffs = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &ej)| j != k && ej > 0) {
                return None;
            }
            let d = e[k] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, C::zero());
            }
            coeffs[d] = c.clone();
        }
        Some(UniPoly(coeffs))
    }

    pub fn from_uni(nvars: usize, k: usize, u: &UniPoly) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (d, c) in u.0.iter().enumerate() {
            let mut e = vec![0; nvars];
            e[k] = d as u32;
            p.add_term(e, c);
        }
        p
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(C::is_real)
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&C::from_int(-1))
    }
}

macro_rules! owned_poly_ops {
    ($t:ty, $($trait:ident $method:ident),*) => {$(
        impl $trait<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&$t> for $t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                (&self).$method(rhs)
            }
        }
    )*};
}

owned_poly_ops!(MultiPoly, Add add, Sub sub, Mul mul);
owned_poly_ops!(UniPoly, Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

const VAR_NAMES: [&str; 3] = ["x", "y", "z"];

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (k, &ek) in e.iter().enumerate() {
                let name = VAR_NAMES.get(k).copied().unwrap_or("v");
                match ek {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{ek}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Univariate Lagrange interpolation through distinct nodes, returned in the monomial basis.
pub fn interpolate(nodes: &[C], values: &[C]) -> crate::Result<UniPoly> {
    assert_eq!(nodes.len(), values.len());
    // Newton divided differences
    let n = nodes.len();
    let mut coef: Vec<C> = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = &nodes[i] - &nodes[i - j];
            coef[i] = num.checked_div(&den)?;
        }
    }
    let mut p = UniPoly::zero();
    for i in (0..n).rev() {
        p = &(&p * &UniPoly::linear(-&nodes[i])) + &UniPoly::constant(coef[i].clone());
    }
    Ok(p)
}

/// Tensor-grid interpolation: `values` are listed with the first axis varying slowest.
pub fn interpolate_grid(axes: &[Vec<C>], values: &[C]) -> crate::Result<MultiPoly> {
    let nv = axes.len();
    let expected: usize = axes.iter().map(Vec::len).product();
    assert_eq!(values.len(), expected, "grid value count");
    if nv == 0 {
        return Ok(MultiPoly::constant(0, values[0].clone()));
    }
    let stride = expected / axes[0].len();
    let mut slices = Vec::with_capacity(axes[0].len());
    for chunk in values.chunks(stride) {
        slices.push(interpolate_grid(&axes[1..], chunk)?);
    }
    let mut exps: Vec<Vec<u32>> = slices.iter().flat_map(|q| q.terms().map(|(e, _)| e.clone())).collect();
    exps.sort();
    exps.dedup();
    let mut out = MultiPoly::zero(nv);
    for e in exps {
        let column: Vec<C> = slices.iter().map(|q| q.coeff(&e)).collect();
        let u = interpolate(&axes[0], &column)?;
        for (d, c) in u.0.iter().enumerate() {
            let mut full = vec![d as u32];
            full.extend_from_slice(&e);
            out.add_term(full, c);
        }
    }
    Ok(out)
}

/// Rational scalars as constant polynomials, for terse table construction.
pub fn rconst(nvars: usize, r: &Rational) -> MultiPoly {
    MultiPoly::constant(nvars, C::from(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn translate_matches_eval() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let p = &(&x.pow(3) * &y) - &y.pow(2).scale(&C::frac(3, 2));
        let a = C::frac(1, 3);
        let b = C::frac(-2, 5);
        let q = p.translate(&[a.clone(), b.clone()]);
        let pt = [C::frac(7, 2), C::frac(5, 9)];
        assert_eq!(q.eval(&pt), p.eval(&[&pt[0] + &a, &pt[1] + &b]));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let u = UniPoly(vec![C::from_int(1), C::frac(-1, 2), C::zero(), C::frac(3, 7)]);
        let nodes: Vec<C> = (1..=5).map(|k| C::frac(k, 3)).collect();
        let vals: Vec<C> = nodes.iter().map(|x| u.eval(x)).collect();
        assert_eq!(interpolate(&nodes, &vals).unwrap(), u);
    }
}
