//! Monic bases adapted to the lattice operators and bivariate polynomials
//! stored against them.
//!
//! A basis is fixed by its roots: B_n(X) = Π_{j<n} (X − r_j), so that
//! X·B_n = B_{n+1} + r_n·B_n. On the quadratic lattice r_j = f_j(β).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{pochhammer, Rational, C};
use crate::latticeops::{self, LatticeSpec, Op};
use crate::matrix::ExactMatrix;
use crate::poly::MultiPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum UniBasis {
    /// F_n on x(s) = s(s+β).
    Quadratic(Rational),
    /// Monic in x² with roots −(2j+1)²/16; the Wilson-operator analogue of F_n at β = 0.
    WilsonSquare,
    Monomial,
}

impl UniBasis {
    pub fn root(&self, j: usize) -> Rational {
        match self {
            UniBasis::Quadratic(b) => structure_scalars(j, b).0,
            UniBasis::WilsonSquare => -structure_scalars(j, &Rational::zero()).0,
            UniBasis::Monomial => Rational::zero(),
        }
    }

    /// The basis adapted to a lattice's operators.
    pub fn for_lattice(lattice: &LatticeSpec) -> Self {
        match &lattice.kind {
            latticeops::LatticeKind::Quadratic(b) => UniBasis::Quadratic(b.clone()),
            latticeops::LatticeKind::WilsonSquare => UniBasis::WilsonSquare,
            latticeops::LatticeKind::Linear => UniBasis::Monomial,
        }
    }

    /// B_n at a lattice value X.
    pub fn eval(&self, n: usize, x: &C) -> C {
        (0..n).map(|j| x - &C::from(self.root(j))).product()
    }

    /// Rows n = 0..=max of H with B_n = Σ_k H[n][k] X^k.
    pub fn expansion(&self, max: usize) -> Vec<Vec<Rational>> {
        let mut h = vec![vec![Rational::one()]];
        for n in 0..max {
            let r = self.root(n);
            let prev = &h[n];
            let next: Vec<Rational> = (0..=n + 1)
                .map(|k| {
                    let shifted = if k > 0 { prev[k - 1].clone() } else { Rational::zero() };
                    let kept = prev.get(k).map_or_else(Rational::zero, |v| &r * v);
                    shifted - kept
                })
                .collect();
            h.push(next);
        }
        h
    }

    /// Rows a = 0..=max of K with X^a = Σ_k K[a][k] B_k.
    pub fn inverse_expansion(&self, max: usize) -> Vec<Vec<Rational>> {
        let mut k = vec![vec![Rational::one()]];
        for a in 0..max {
            let prev = &k[a];
            let next: Vec<Rational> = (0..=a + 1)
                .map(|j| {
                    let up = if j > 0 { prev[j - 1].clone() } else { Rational::zero() };
                    let stay = prev.get(j).map_or_else(Rational::zero, |v| &self.root(j) * v);
                    up + stay
                })
                .collect();
            k.push(next);
        }
        k
    }
}

/// F_n(x(s)) on the quadratic lattice, as the product of its two Pochhammer factors.
pub fn f_basis_eval(n: usize, beta: &Rational, s: &C) -> C {
    let b = C::from(beta);
    let two_s = s.scale(&Rational::from(2));
    let half = C::frac(1, 2);
    let left = pochhammer(&(&(&-&b - &two_s) + &half), n);
    let right = pochhammer(&(&(&b + &two_s) + &half), n);
    let scale = Rational::from(-4).pow(n as u32).inv().expect("nonzero");
    (&left * &right).scale(&scale)
}

/// (f_n(β), g_n): X·F_n = F_{n+1} + f_n F_n and S F_n = F_n + g_n F_{n−1}.
pub fn structure_scalars(n: usize, beta: &Rational) -> (Rational, Rational) {
    let n = Rational::from(n);
    let two_n1 = &n * Rational::from(2) + Rational::one();
    let f = (&two_n1 * &two_n1 - beta * beta * Rational::from(4)) / Rational::from(16);
    let g = &n * (&n * Rational::from(2) - Rational::one()) / Rational::from(4);
    (f, g)
}

/// The closed forms for the two subleading coefficients of F_n.
pub fn h_printed(n: usize, lower: usize, beta: &Rational) -> Rational {
    let nr = Rational::from(n);
    let b2 = beta * beta;
    match lower {
        1 => (-(&nr * &nr * &nr) * Rational::from(4) + &b2 * &nr * Rational::from(12) + &nr) / Rational::from(48),
        2 => {
            let two_n = &nr * Rational::from(2);
            let poly = &b2 * &b2 * Rational::from(720)
                + &b2 * Rational::from(120) * (Rational::one() - &nr * &nr * Rational::from(4))
                + (&two_n - Rational::from(3))
                    * (&two_n - Rational::one())
                    * (&two_n + Rational::one())
                    * (&nr * Rational::from(10) + Rational::from(7));
            (&nr - Rational::one()) * &nr * poly / Rational::from(23040)
        }
        _ => panic!("only the first two subleading coefficients have closed forms"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorMatrices {
    pub e1: ExactMatrix,
    pub e2: ExactMatrix,
    pub j1: ExactMatrix,
    pub j2: ExactMatrix,
    pub l1: ExactMatrix,
    pub l2: ExactMatrix,
    pub m1: ExactMatrix,
    pub m2: ExactMatrix,
}

/// D, S and multiplication by the lattice variables acting on the vector 𝐅_n.
pub fn operator_matrices(n: usize, beta1: &Rational, beta2: &Rational) -> OperatorMatrices {
    let int = |k: usize| C::from_int(k as i64);
    let g = |k: usize| C::from(structure_scalars(k, &Rational::zero()).1);
    let e1 = ExactMatrix::from_fn(n + 1, n, |i, j| if i == j { int(n - i) } else { C::zero() });
    let e2 = ExactMatrix::from_fn(n + 1, n, |i, j| if i == j + 1 { int(i) } else { C::zero() });
    let j1 = ExactMatrix::from_fn(n + 1, n, |i, j| if i == j { g(n - i) } else { C::zero() });
    let j2 = ExactMatrix::from_fn(n + 1, n, |i, j| if i == j + 1 { g(i) } else { C::zero() });
    let l1 = ExactMatrix::from_fn(n + 1, n + 2, |i, j| if i == j { C::one() } else { C::zero() });
    let l2 = ExactMatrix::from_fn(n + 1, n + 2, |i, j| if j == i + 1 { C::one() } else { C::zero() });
    let m1 = ExactMatrix::diag(&(0..=n).map(|k| C::from(structure_scalars(n - k, beta1).0)).collect::<Vec<_>>());
    let m2 = ExactMatrix::diag(&(0..=n).map(|k| C::from(structure_scalars(k, beta2).0)).collect::<Vec<_>>());
    OperatorMatrices { e1, e2, j1, j2, l1, l2, m1, m2 }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Basis {
    Monomial,
    FTensor(UniBasis, UniBasis),
}

/// Bivariate polynomial in the lattice variables; `coeffs[i][j]` multiplies
/// the basis element of degree i in the first variable and j in the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BivarPoly {
    basis: Basis,
    degree: usize,
    coeffs: Vec<Vec<C>>,
}

fn triangle(degree: usize) -> Vec<Vec<C>> {
    (0..=degree).map(|i| vec![C::zero(); degree - i + 1]).collect()
}

impl BivarPoly {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        BivarPoly { basis, degree, coeffs: triangle(degree) }
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn degree_bound(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, i: usize, j: usize) -> C {
        if i + j > self.degree {
            return C::zero();
        }
        self.coeffs[i][j].clone()
    }

    pub fn set(&mut self, i: usize, j: usize, c: C) {
        assert!(i + j <= self.degree, "({i},{j}) exceeds degree bound {}", self.degree);
        self.coeffs[i][j] = c;
    }

    /// Monomial-basis view of a polynomial in two variables.
    pub fn from_multipoly(p: &MultiPoly) -> Result<Self> {
        if p.nvars() != 2 {
            return Err(Error::Dimension(format!("bivariate polynomial needs 2 variables, got {}", p.nvars())));
        }
        let degree = p.total_degree().unwrap_or(0) as usize;
        let mut out = BivarPoly::zero(Basis::Monomial, degree);
        for (e, c) in p.terms() {
            out.coeffs[e[0] as usize][e[1] as usize] = c.clone();
        }
        Ok(out)
    }

    pub fn to_multipoly(&self) -> MultiPoly {
        let m = self.convert(&Basis::Monomial);
        let mut p = MultiPoly::zero(2);
        for (i, row) in m.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                p.add_term(vec![i as u32, j as u32], c);
            }
        }
        p
    }

    /// Value at lattice values (X, Y).
    pub fn eval(&self, x: &C, y: &C) -> C {
        let (bx, by) = match &self.basis {
            Basis::Monomial => (UniBasis::Monomial, UniBasis::Monomial),
            Basis::FTensor(a, b) => (a.clone(), b.clone()),
        };
        let vx: Vec<C> = (0..=self.degree).map(|k| bx.eval(k, x)).collect();
        let vy: Vec<C> = (0..=self.degree).map(|k| by.eval(k, y)).collect();
        let mut acc = C::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    acc += &(&(c * &vx[i]) * &vy[j]);
                }
            }
        }
        acc
    }

    pub fn convert(&self, target: &Basis) -> Self {
        if *target == self.basis {
            return self.clone();
        }
        let d = self.degree;
        let mono = match &self.basis {
            Basis::Monomial => self.clone(),
            Basis::FTensor(a, b) => {
                let (ha, hb) = (a.expansion(d), b.expansion(d));
                self.transform(&ha, &hb, Basis::Monomial)
            }
        };
        match target {
            Basis::Monomial => mono,
            Basis::FTensor(a, b) => {
                let (ka, kb) = (a.inverse_expansion(d), b.inverse_expansion(d));
                mono.transform(&ka, &kb, target.clone())
            }
        }
    }

    /// Applies the per-variable triangular change of basis.
    fn transform(&self, ta: &[Vec<Rational>], tb: &[Vec<Rational>], basis: Basis) -> Self {
        let mut out = BivarPoly::zero(basis, self.degree);
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, a) in ta[i].iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let ca = c.scale(a);
                    for (l, b) in tb[j].iter().enumerate() {
                        if !b.is_zero() {
                            out.coeffs[k][l] += &ca.scale(b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Coefficients of the degree-n block ordered (n,0), (n−1,1), ..., (0,n).
    pub fn block(&self, n: usize) -> Vec<C> {
        (0..=n).map(|k| self.coeff(n - k, k)).collect()
    }

    pub fn from_blocks(basis: Basis, blocks: &[Vec<C>]) -> Self {
        let degree = blocks.len().saturating_sub(1);
        let mut out = BivarPoly::zero(basis, degree);
        for (n, b) in blocks.iter().enumerate() {
            assert_eq!(b.len(), n + 1, "block {n} length");
            for (k, c) in b.iter().enumerate() {
                out.coeffs[n - k][k] = c.clone();
            }
        }
        out
    }

    /// Largest total degree carrying a nonzero coefficient.
    pub fn actual_degree(&self) -> Option<usize> {
        (0..=self.degree).rev().find(|&n| self.block(n).iter().any(|c| !c.is_zero()))
    }

    /// D or S along one axis, computed in coefficient space on an adapted basis.
    pub fn apply_op(&self, axis: usize, op: Op) -> Result<Self> {
        let Basis::FTensor(a, b) = &self.basis else {
            return Err(Error::Usage("coefficient-space operators need an F-tensor basis".into()));
        };
        let ub = if axis == 0 { a } else { b };
        let UniBasis::Quadratic(_) = ub else {
            return Err(Error::Usage("coefficient-space operators are defined on the quadratic F-basis".into()));
        };
        let mut out = BivarPoly::zero(self.basis.clone(), self.degree);
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                let k = if axis == 0 { i } else { j };
                let lower = |out: &mut BivarPoly, v: C| {
                    if axis == 0 {
                        out.coeffs[i - 1][j] += &v;
                    } else {
                        out.coeffs[i][j - 1] += &v;
                    }
                };
                match op {
                    Op::D => {
                        if k > 0 {
                            lower(&mut out, c.scale(&Rational::from(k)));
                        }
                    }
                    Op::S => {
                        out.coeffs[i][j] += c;
                        if k > 0 {
                            lower(&mut out, c.scale(&structure_scalars(k, &Rational::zero()).1));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplication by the lattice variable of `axis` in the quadratic F-basis.
    pub fn mul_var(&self, axis: usize) -> Result<Self> {
        let Basis::FTensor(UniBasis::Quadratic(b1), UniBasis::Quadratic(b2)) = &self.basis else {
            return Err(Error::Usage("multiplication rule is defined on the quadratic F-basis".into()));
        };
        let beta = if axis == 0 { b1 } else { b2 };
        let mut out = BivarPoly::zero(self.basis.clone(), self.degree + 1);
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                let k = if axis == 0 { i } else { j };
                let (up_i, up_j) = if axis == 0 { (i + 1, j) } else { (i, j + 1) };
                out.coeffs[up_i][up_j] += c;
                out.coeffs[i][j] += &c.scale(&structure_scalars(k, beta).0);
            }
        }
        Ok(out)
    }
}

/// Coefficient of the degree-(n−d) monomial vector in 𝐅_n: 𝐅_n = Σ_d T_{n,n−d} 𝐱^{n−d}.
pub fn transition(bx: &UniBasis, by: &UniBasis, n: usize, d: usize) -> ExactMatrix {
    assert!(d <= n);
    let (hx, hy) = (bx.expansion(n), by.expansion(n));
    let m = n - d;
    ExactMatrix::from_fn(n + 1, m + 1, |k, kk| {
        // entry k of 𝐅_n is B_{n−k}(x)B_k(y); entry kk of 𝐱^m is x^{m−kk} y^{kk}
        let (px, py) = (n - k, k);
        let (ex, ey) = (m - kk, kk);
        if ex > px || ey > py {
            return C::zero();
        }
        C::from(&hx[px][ex] * &hy[py][ey])
    })
}

/// The printed U_{n,n−1} and U_{n,n−2}, assembled from the closed-form H values.
pub fn u_printed(n: usize, lower: usize, beta1: &Rational, beta2: &Rational) -> ExactMatrix {
    let h1 = |a: usize, d: usize| if a >= d { C::from(h_printed(a, d, beta1)) } else { C::zero() };
    let h2 = |a: usize, d: usize| if a >= d { C::from(h_printed(a, d, beta2)) } else { C::zero() };
    match lower {
        1 => ExactMatrix::from_fn(n + 1, n, |r, c| {
            if r == c {
                h1(n - c, 1)
            } else if r == c + 1 {
                h2(c + 1, 1)
            } else {
                C::zero()
            }
        }),
        2 => ExactMatrix::from_fn(n + 1, n - 1, |r, c| {
            if r == c {
                h1(n - c, 2)
            } else if r == c + 1 {
                &h1(n - c - 1, 1) * &h2(c + 1, 1)
            } else if r == c + 2 {
                h2(c + 2, 2)
            } else {
                C::zero()
            }
        }),
        _ => panic!("U is printed only for one and two degrees down"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_scalar_values() {
        assert_eq!(structure_scalars(1, &Rational::zero()).1, Rational::frac(1, 4));
        assert_eq!(structure_scalars(0, &Rational::from(2)).0, Rational::frac(-15, 16));
        assert_eq!(structure_scalars(0, &Rational::zero()).1, Rational::zero());
    }

    #[test]
    fn operator_matrix_examples() {
        let om = operator_matrices(2, &Rational::from(1), &Rational::from(3));
        assert_eq!(om.l1.to_rows(), ExactMatrix::from_fn(3, 4, |i, j| C::from_int((i == j) as i64)).to_rows());
        assert_eq!(om.e1, ExactMatrix::from_rows(vec![
            vec![C::from_int(2), C::zero()],
            vec![C::zero(), C::one()],
            vec![C::zero(), C::zero()],
        ]));
        let om1 = operator_matrices(1, &Rational::from(1), &Rational::from(3));
        let (f0, f1) = (structure_scalars(0, &Rational::from(3)).0, structure_scalars(1, &Rational::from(3)).0);
        assert_eq!(om1.m2, ExactMatrix::diag(&[C::from(f0), C::from(f1)]));
    }

    #[test]
    fn first_basis_element() {
        let beta = Rational::frac(2, 3);
        let s = C::frac(17, 7);
        let x = &s * &(&s + &C::from(&beta));
        let expect = &(&x + &C::from(&beta * &beta / Rational::from(4))) - &C::frac(1, 16);
        assert_eq!(f_basis_eval(1, &beta, &s), expect);
        assert_eq!(f_basis_eval(0, &beta, &s), C::one());
    }

    #[test]
    fn h_closed_forms_match_recursion() {
        for beta in [Rational::zero(), Rational::frac(2, 3), Rational::frac(-7, 5)] {
            let h = UniBasis::Quadratic(beta.clone()).expansion(7);
            for n in 1..=6 {
                assert_eq!(h[n][n - 1], h_printed(n, 1, &beta), "n={n}");
                if n >= 2 {
                    assert_eq!(h[n][n - 2], h_printed(n, 2, &beta), "n={n}");
                }
            }
        }
    }
}
