//! Three-term recurrences of the bivariate families: S_n/T_n, the G′ and G
//! matrices, A/B/C, generation of the vector polynomials, leading matrices
//! and connection coefficients.

pub mod leading;
pub mod printed;

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactfield::C;
use crate::families::{Family, FamilySpec, Params};
use crate::fbasis::{transition, Basis, BivarPoly, UniBasis};
use crate::formula::{Bindings, Formula};
use crate::latticeops::poly_apply_chain;
use crate::matrix::ExactMatrix;
use crate::pdeverify::{coefficients, CoeffTable, TableKind};
use crate::poly::MultiPoly;

pub use leading::{leading_matrix, leading_matrix_oracle, leading_matrix_printed, LeadingReading};

/// The four bivariate equations with a recurrence theory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TtrrFamily {
    Racah,
    Wilson,
    Cdh,
    Ch,
}

impl TtrrFamily {
    pub const ALL: [TtrrFamily; 4] = [TtrrFamily::Racah, TtrrFamily::Wilson, TtrrFamily::Cdh, TtrrFamily::Ch];

    pub fn for_family(f: Family) -> Result<Self> {
        match TableKind::for_family(f) {
            TableKind::Racah => Ok(TtrrFamily::Racah),
            TableKind::Wilson => Ok(TtrrFamily::Wilson),
            TableKind::Cdh => Ok(TtrrFamily::Cdh),
            TableKind::Ch => Ok(TtrrFamily::Ch),
            TableKind::ChTri => Err(Error::Usage("recurrences are implemented for bivariate families".into())),
        }
    }

    pub fn table_kind(self) -> TableKind {
        match self {
            TtrrFamily::Racah => TableKind::Racah,
            TtrrFamily::Wilson => TableKind::Wilson,
            TtrrFamily::Cdh => TableKind::Cdh,
            TtrrFamily::Ch => TableKind::Ch,
        }
    }

    fn text(self) -> &'static printed::SnTnText {
        match self {
            TtrrFamily::Racah => &printed::RACAH,
            TtrrFamily::Wilson => &printed::WILSON,
            TtrrFamily::Cdh => &printed::CDH,
            TtrrFamily::Ch => &printed::CH,
        }
    }

    /// Tensor basis 𝐅_n in which S_n and T_n are expressed: the quadratic-lattice
    /// F-basis for Racah, plain powers of the lattice variables otherwise.
    pub fn basis(self, params: &Params) -> (UniBasis, UniBasis) {
        match self {
            TtrrFamily::Racah => (UniBasis::Quadratic(params.get("b1").clone()), UniBasis::Quadratic(params.get("b2").clone())),
            _ => (UniBasis::Monomial, UniBasis::Monomial),
        }
    }
}

impl FromStr for TtrrFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TtrrFamily::for_family(s.parse()?)
    }
}

fn formula_scalar(src: &str, params: &Params, k: usize, n: usize) -> Result<C> {
    let mut b = Bindings::new(0);
    for (name, v) in params.entries() {
        b.rational(name, v);
    }
    b.imaginary_unit().scalar("k", C::from_int(k as i64)).scalar("n", C::from_int(n as i64));
    Formula::parse(src)?.eval_scalar(&b)
}

/// S_n ((n+1)×n) from the printed closed forms; 1-based s_{k,k} is entry (k−1, k−1).
pub fn sn_printed(family: TtrrFamily, params: &Params, n: usize) -> Result<ExactMatrix> {
    if n == 0 {
        return Err(Error::Usage("S_n needs n ≥ 1".into()));
    }
    let t = family.text();
    let mut s = ExactMatrix::zeros(n + 1, n);
    for k in 1..=n {
        s[(k - 1, k - 1)] = formula_scalar(t.s_kk, params, k, n)?;
        s[(k, k - 1)] = formula_scalar(t.s_k1k, params, k, n)?;
    }
    Ok(s)
}

/// T_n ((n+1)×(n−1)) from the printed closed forms, with an explicit t_{k+2,k} text.
pub fn tn_printed_with(family: TtrrFamily, params: &Params, n: usize, t_k2k: &str) -> Result<ExactMatrix> {
    if n == 0 {
        return Err(Error::Usage("T_n needs n ≥ 1".into()));
    }
    let t = family.text();
    let mut m = ExactMatrix::zeros(n + 1, n - 1);
    for k in 1..n {
        m[(k - 1, k - 1)] = formula_scalar(t.t_kk, params, k, n)?;
        m[(k, k - 1)] = formula_scalar(t.t_k1k, params, k, n)?;
        m[(k + 1, k - 1)] = formula_scalar(t_k2k, params, k, n)?;
    }
    Ok(m)
}

pub fn tn_printed(family: TtrrFamily, params: &Params, n: usize) -> Result<ExactMatrix> {
    tn_printed_with(family, params, n, family.text().t_k2k)
}

/// (S_n, T_n) from the printed closed forms.
pub fn sn_tn(family: TtrrFamily, params: &Params, n: usize) -> Result<(ExactMatrix, ExactMatrix)> {
    Ok((sn_printed(family, params, n)?, tn_printed(family, params, n)?))
}

/// One image Σ f_i E_i 𝐅_n, split into its 𝐅_n, 𝐅_{n−1} and 𝐅_{n−2} blocks.
struct OperatorImage {
    top: ExactMatrix,
    s: ExactMatrix,
    t: ExactMatrix,
}

fn operator_image(table: &CoeffTable, basis: &(UniBasis, UniBasis), n: usize) -> Result<OperatorImage> {
    let b = Basis::FTensor(basis.0.clone(), basis.1.clone());
    let mut top = ExactMatrix::zeros(n + 1, n + 1);
    let mut s = ExactMatrix::zeros(n + 1, n);
    let mut t = ExactMatrix::zeros(n + 1, n.saturating_sub(1));
    for k in 0..=n {
        let mut e = BivarPoly::zero(b.clone(), n);
        e.set(n - k, k, C::one());
        let p = e.to_multipoly();
        let mut image = MultiPoly::zero(2);
        for c in &table.coeffs {
            image = &image + &(&c.poly * &poly_apply_chain(&table.lattices, &c.index.steps(), &p));
        }
        let img = BivarPoly::from_multipoly(&image)?.convert(&b);
        if img.actual_degree().is_some_and(|d| d > n) {
            return Err(Error::Inconsistent(format!("the operator raises the degree of 𝐅_{n}")));
        }
        for (j, v) in img.block(n).into_iter().enumerate() {
            top[(k, j)] = v;
        }
        if n >= 1 {
            for (j, v) in img.block(n - 1).into_iter().enumerate() {
                s[(k, j)] = v;
            }
        }
        if n >= 2 {
            for (j, v) in img.block(n - 2).into_iter().enumerate() {
                t[(k, j)] = v;
            }
        }
    }
    Ok(OperatorImage { top, s, t })
}

/// S_n and T_n recovered by applying the operator of the equation to the adapted basis vector 𝐅_n.
pub fn sn_tn_derived(family: TtrrFamily, params: &Params, n: usize) -> Result<(ExactMatrix, ExactMatrix)> {
    sn_tn_in_basis(family, params, n, &family.basis(params))
}

/// Same recovery in an arbitrary tensor basis.
pub fn sn_tn_in_basis(family: TtrrFamily, params: &Params, n: usize, basis: &(UniBasis, UniBasis)) -> Result<(ExactMatrix, ExactMatrix)> {
    let table = coefficients(family.table_kind(), params)?;
    let img = operator_image(&table, basis, n)?;
    let expect = ExactMatrix::identity(n + 1).scale(&-&table.eigenvalue(n));
    if img.top != expect {
        return Err(Error::Inconsistent(format!("the operator does not act as −λ_{n} on the top block")));
    }
    Ok((img.s, img.t))
}

/// Where S_n and T_n come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SnTnSource {
    Printed,
    Derived,
}

/// Z_m(λ_l) = (λ_m − λ_l)·I_{m+1}; a collision is a degenerate parameter choice.
pub fn z_matrix(table: &CoeffTable, m: usize, l: usize) -> Result<ExactMatrix> {
    let gap = &table.eigenvalue(m) - &table.eigenvalue(l);
    if gap.is_zero() {
        return Err(Error::Degenerate(format!("λ_{m} = λ_{l} at these parameters")));
    }
    Ok(ExactMatrix::identity(m + 1).scale(&gap))
}

/// (G′_{n,n−1}, G′_{n,n−2}) from G′_{n,n}; the second is None for n < 2.
/// `s` holds S_n and, for n ≥ 2, S_{n−1}.
pub fn g_primes(
    gnn: &ExactMatrix,
    table: &CoeffTable,
    s: &[ExactMatrix],
    t: &ExactMatrix,
    n: usize,
) -> Result<(ExactMatrix, Option<ExactMatrix>)> {
    if n == 0 || gnn.shape() != (n + 1, n + 1) {
        return Err(Error::Dimension(format!("G_{n},{n} must be {}×{} with n ≥ 1", n + 1, n + 1)));
    }
    let g1 = gnn.checked_mul(&s[0])?.checked_mul(&z_matrix(table, n - 1, n)?.inverse()?)?;
    if n < 2 {
        return Ok((g1, None));
    }
    let g2 = (&gnn.checked_mul(t)? + &g1.checked_mul(&s[1])?).checked_mul(&z_matrix(table, n - 2, n)?.inverse()?)?;
    Ok((g1, Some(g2)))
}

/// (G_{n,n−1}, G_{n,n−2}) in the monomial vector basis, from the G′ triple.
pub fn g_corrections(
    basis: &(UniBasis, UniBasis),
    gp: (&ExactMatrix, &ExactMatrix, Option<&ExactMatrix>),
    n: usize,
) -> Result<(ExactMatrix, Option<ExactMatrix>)> {
    let (g0, g1, g2) = gp;
    let u = |m: usize, d: usize| transition(&basis.0, &basis.1, m, d);
    let c1 = &g0.checked_mul(&u(n, 1))? + g1;
    let c2 = match g2 {
        Some(g2) => Some(&(&g0.checked_mul(&u(n, 2))? + &g1.checked_mul(&u(n - 1, 1))?) + g2),
        None => None,
    };
    Ok((c1, c2))
}

/// L_{n,1} and L_{n,2}: x·𝐱^n = L_{n,1}𝐱^{n+1}, y·𝐱^n = L_{n,2}𝐱^{n+1}.
pub fn l_matrix(n: usize, j: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n + 1, n + 2, |r, c| if c == r + j - 1 { C::one() } else { C::zero() })
}

/// Leading and two subleading blocks of 𝐏_n in the monomial vector basis.
#[derive(Clone, Debug, Serialize)]
pub struct GBlocks {
    pub n: usize,
    pub gnn: ExactMatrix,
    pub gpn1: Option<ExactMatrix>,
    pub gpn2: Option<ExactMatrix>,
    pub gn1: Option<ExactMatrix>,
    pub gn2: Option<ExactMatrix>,
    pub sn: Option<ExactMatrix>,
    pub tn: Option<ExactMatrix>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Abc {
    pub n: usize,
    pub a: [ExactMatrix; 2],
    pub b: [ExactMatrix; 2],
    pub c: [Option<ExactMatrix>; 2],
}

/// Recurrence data for one family and a chosen sequence of leading matrices.
#[derive(Clone, Debug)]
pub struct Recurrence {
    pub family: TtrrFamily,
    pub params: Params,
    pub source: SnTnSource,
    pub blocks: Vec<GBlocks>,
}

/// Choice of G_{n,n}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LeadingChoice {
    Identity,
    FamilyLeading(Family),
}

impl LeadingChoice {
    pub fn matrix(self, params: &Params, n: usize) -> Result<ExactMatrix> {
        match self {
            LeadingChoice::Identity => Ok(ExactMatrix::identity(n + 1)),
            LeadingChoice::FamilyLeading(f) => leading_matrix(f, params, n),
        }
    }
}

impl Recurrence {
    /// G blocks for n = 0..=max_n.
    pub fn build(family: TtrrFamily, params: &Params, source: SnTnSource, choice: LeadingChoice, max_n: usize) -> Result<Self> {
        let table = coefficients(family.table_kind(), params)?;
        let basis = family.basis(params);
        let st = |n: usize| -> Result<(ExactMatrix, ExactMatrix)> {
            match source {
                SnTnSource::Printed => sn_tn(family, params, n),
                SnTnSource::Derived => sn_tn_derived(family, params, n),
            }
        };
        let mut blocks = Vec::with_capacity(max_n + 1);
        let mut prev_s: Option<ExactMatrix> = None;
        for n in 0..=max_n {
            let gnn = choice.matrix(params, n)?;
            if n == 0 {
                blocks.push(GBlocks { n, gnn, gpn1: None, gpn2: None, gn1: None, gn2: None, sn: None, tn: None });
                continue;
            }
            let (s, t) = st(n)?;
            let s_list: Vec<ExactMatrix> = match &prev_s {
                Some(p) => vec![s.clone(), p.clone()],
                None => vec![s.clone()],
            };
            let (gp1, gp2) = g_primes(&gnn, &table, &s_list, &t, n)?;
            let (g1, g2) = g_corrections(&basis, (&gnn, &gp1, gp2.as_ref()), n)?;
            blocks.push(GBlocks {
                n,
                gnn,
                gpn1: Some(gp1),
                gpn2: gp2,
                gn1: Some(g1),
                gn2: g2,
                sn: Some(s.clone()),
                tn: if n >= 2 { Some(t) } else { None },
            });
            prev_s = Some(s);
        }
        Ok(Recurrence { family, params: params.clone(), source, blocks })
    }

    /// A_{n,j}, B_{n,j}, C_{n,j} for n + 1 ≤ max_n.
    pub fn abc(&self, n: usize) -> Result<Abc> {
        if n + 1 >= self.blocks.len() {
            return Err(Error::Usage(format!("recurrence at n = {n} needs G blocks up to {}", n + 1)));
        }
        let cur = &self.blocks[n];
        let next = &self.blocks[n + 1];
        let next_inv = next.gnn.inverse()?;
        let cur_inv = cur.gnn.inverse()?;
        let mut a_out = Vec::new();
        let mut b_out = Vec::new();
        let mut c_out = Vec::new();
        for j in 1..=2 {
            let a = cur.gnn.checked_mul(&l_matrix(n, j))?.checked_mul(&next_inv)?;
            let next_g1 = next.gn1.as_ref().expect("n+1 ≥ 1");
            let mut b_num = -&a.checked_mul(next_g1)?;
            if let Some(g1) = &cur.gn1 {
                b_num = &g1.checked_mul(&l_matrix(n - 1, j))? + &b_num;
            }
            let b = b_num.checked_mul(&cur_inv)?;
            let c = if n == 0 {
                None
            } else {
                let prev_inv = self.blocks[n - 1].gnn.inverse()?;
                let next_g2 = next.gn2.as_ref().expect("n+1 ≥ 2");
                let mut num = &(-&a.checked_mul(next_g2)?) - &b.checked_mul(cur.gn1.as_ref().expect("n ≥ 1"))?;
                if let Some(g2) = &cur.gn2 {
                    num = &g2.checked_mul(&l_matrix(n - 2, j))? + &num;
                }
                Some(num.checked_mul(&prev_inv)?)
            };
            a_out.push(a);
            b_out.push(b);
            c_out.push(c);
        }
        let take2 = |mut v: Vec<ExactMatrix>| {
            let second = v.pop().expect("two");
            [v.pop().expect("two"), second]
        };
        let c1 = c_out.remove(0);
        let c2 = c_out.remove(0);
        Ok(Abc { n, a: take2(a_out), b: take2(b_out), c: [c1, c2] })
    }
}

/// Vector 𝐏_n of polynomials in the lattice variables, graded-lexicographic order (n,0), (n−1,1), ..., (0,n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVector {
    pub n: usize,
    pub entries: Vec<MultiPoly>,
}

impl PolyVector {
    /// Coefficient matrix of the degree-d monomials x^{d−j}y^j.
    pub fn block(&self, d: usize) -> ExactMatrix {
        ExactMatrix::from_fn(self.entries.len(), d + 1, |r, j| self.entries[r].coeff(&[(d - j) as u32, j as u32]))
    }

    /// M·𝐏ₙ for a square M.
    pub fn transform(&self, m: &ExactMatrix) -> Result<PolyVector> {
        if m.cols() != self.entries.len() {
            return Err(Error::Dimension(format!("{}x{} matrix against a vector of length {}", m.rows(), m.cols(), self.entries.len())));
        }
        Ok(PolyVector { n: self.n, entries: mat_times_polys(m, &self.entries) })
    }

    /// Values of the entries at one point.
    pub fn eval(&self, point: &[C]) -> Vec<C> {
        self.entries.iter().map(|p| p.eval(point)).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "order": "graded-lex",
            "entries": self.entries.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn mat_times_polys(m: &ExactMatrix, v: &[MultiPoly]) -> Vec<MultiPoly> {
    (0..m.rows())
        .map(|r| {
            let mut acc = MultiPoly::zero(2);
            for (c, p) in v.iter().enumerate() {
                let w = &m[(r, c)];
                if !w.is_zero() {
                    acc = &acc + &p.scale(w);
                }
            }
            acc
        })
        .collect()
}

/// Solves M·X = R for a vector of polynomials X, column by column over monomials.
fn solve_polys(m: &ExactMatrix, rhs: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    let monos: BTreeSet<Vec<u32>> = rhs.iter().flat_map(|p| p.terms().map(|(e, _)| e.clone())).collect();
    let monos: Vec<Vec<u32>> = monos.into_iter().collect();
    let r = ExactMatrix::from_fn(rhs.len(), monos.len(), |i, j| rhs[i].coeff(&monos[j]));
    let x = m.solve(&r)?;
    Ok((0..m.cols())
        .map(|i| MultiPoly::from_terms(2, monos.iter().enumerate().map(|(j, e)| (e.clone(), x[(i, j)].clone()))))
        .collect())
}

/// 𝐏_0..𝐏_{up_to} from the recurrence, solving the stacked pair of relations for 𝐏_{n+1}.
pub fn generate(recurrence: &Recurrence, up_to: usize) -> Result<Vec<PolyVector>> {
    if recurrence.blocks.len() < up_to + 1 {
        return Err(Error::Usage(format!("recurrence built to n = {}, asked for {up_to}", recurrence.blocks.len() - 1)));
    }
    let x = [MultiPoly::var(2, 0), MultiPoly::var(2, 1)];
    let g00 = &recurrence.blocks[0].gnn[(0, 0)];
    let mut out = vec![PolyVector { n: 0, entries: vec![MultiPoly::constant(2, g00.clone())] }];
    for n in 0..up_to {
        let abc = recurrence.abc(n)?;
        let joint = abc.a[0].vstack(&abc.a[1]);
        if joint.rank() != n + 2 {
            return Err(Error::Degenerate(format!("joint A_{n} has rank {} < {}", joint.rank(), n + 2)));
        }
        let mut rhs = Vec::new();
        for j in 0..2 {
            let cur = &out[n].entries;
            let mut r: Vec<MultiPoly> = cur.iter().map(|p| &x[j] * p).collect();
            let bp = mat_times_polys(&abc.b[j], cur);
            for (ri, bi) in r.iter_mut().zip(&bp) {
                *ri = &*ri - bi;
            }
            if let Some(c) = &abc.c[j] {
                let cp = mat_times_polys(c, &out[n - 1].entries);
                for (ri, ci) in r.iter_mut().zip(&cp) {
                    *ri = &*ri - ci;
                }
            }
            rhs.extend(r);
        }
        let next = solve_polys(&joint, &rhs).map_err(|e| match e {
            Error::Inconsistent(m) => Error::Inconsistent(format!("recurrence for 𝐏_{}: {m}", n + 1)),
            e => e,
        })?;
        out.push(PolyVector { n: n + 1, entries: next });
    }
    Ok(out)
}

/// Residual x_j𝐏_n − A𝐏_{n+1} − B𝐏_n − C𝐏_{n−1} as polynomials, for a given sequence of vectors.
pub fn recurrence_residual(abc: &Abc, vectors: &[PolyVector], j: usize) -> Vec<MultiPoly> {
    let n = abc.n;
    let x = MultiPoly::var(2, j);
    let lhs: Vec<MultiPoly> = vectors[n].entries.iter().map(|p| &x * p).collect();
    let a = mat_times_polys(&abc.a[j], &vectors[n + 1].entries);
    let b = mat_times_polys(&abc.b[j], &vectors[n].entries);
    let c = match &abc.c[j] {
        Some(c) => mat_times_polys(c, &vectors[n - 1].entries),
        None => vec![MultiPoly::zero(2); n + 1],
    };
    lhs.iter()
        .zip(a.iter().zip(b.iter().zip(&c)))
        .map(|(l, (a, (b, c)))| &(&(l - a) - b) - c)
        .collect()
}

/// Family members (n−k, k) as polynomials in the lattice variables, by interpolation of eval().
pub fn family_vector(spec: &FamilySpec, n: usize) -> Result<PolyVector> {
    let lat = spec.lattices();
    let axes: Vec<Vec<C>> = lat.iter().map(|l| distinct_points(l, n + 1)).collect();
    let pts = crate::latticeops::tensor_grid(&axes);
    let lv: Vec<Vec<C>> = axes.iter().zip(&lat).map(|(a, l)| a.iter().map(|s| l.value(s)).collect()).collect();
    let mut entries = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let label = [n - k, k];
        let vals = pts.iter().map(|p| spec.eval(&label, p)).collect::<Result<Vec<_>>>()?;
        entries.push(crate::poly::interpolate_grid(&lv, &vals)?);
    }
    Ok(PolyVector { n, entries })
}

fn distinct_points(l: &crate::latticeops::LatticeSpec, count: usize) -> Vec<C> {
    let off = crate::latticeops::default_offset();
    let mut out: Vec<C> = Vec::new();
    let mut vals: Vec<C> = Vec::new();
    let mut k = 1i64;
    while out.len() < count {
        let s = C::real(crate::exactfield::Rational::from(k) + off.clone());
        let v = l.value(&s);
        if !vals.contains(&v) {
            vals.push(v);
            out.push(s);
        }
        k += 1;
    }
    out
}

/// C with 𝐏_n = C·𝐏̄_n, from the two leading matrices.
pub fn connection(g: &ExactMatrix, gbar: &ExactMatrix) -> Result<ExactMatrix> {
    if g.shape() != gbar.shape() || g.rows() != g.cols() {
        return Err(Error::Dimension("connection needs two square matrices of one size".into()));
    }
    g.checked_mul(&gbar.inverse()?)
}

/// Ranks of A_{n,j}, C_{n+1,j} and of the joint matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub n: usize,
    pub rank_a: [usize; 2],
    pub rank_c_next: [usize; 2],
    pub joint_a: usize,
    pub joint_c_next: usize,
}

impl RankReport {
    pub fn holds(&self) -> bool {
        let n = self.n;
        self.rank_a == [n + 1; 2] && self.rank_c_next == [n + 1; 2] && self.joint_a == n + 2 && self.joint_c_next == n + 2
    }
}

/// Rank conditions at n; needs the recurrence built to n + 2.
pub fn rank_report(rec: &Recurrence, n: usize) -> Result<RankReport> {
    let here = rec.abc(n)?;
    let next = rec.abc(n + 1)?;
    let c = |j: usize| next.c[j].clone().expect("n + 1 ≥ 1");
    Ok(RankReport {
        n,
        rank_a: [here.a[0].rank(), here.a[1].rank()],
        rank_c_next: [c(0).rank(), c(1).rank()],
        joint_a: here.a[0].vstack(&here.a[1]).rank(),
        joint_c_next: c(0).hstack(&c(1)).rank(),
    })
}

/// The two bivariate families sharing one recurrence space.
pub fn family_pair(family: TtrrFamily) -> Option<(Family, Family)> {
    match family {
        TtrrFamily::Racah => Some((Family::RacahBiv, Family::RacahBivBar)),
        TtrrFamily::Wilson => Some((Family::WilsonBiv, Family::WilsonBivBar)),
        TtrrFamily::Ch => Some((Family::ChBiv, Family::ChBivBar)),
        TtrrFamily::Cdh => None,
    }
}

/// Connection 𝐏_n = C·𝐏̄_n between two families, from their leading matrices.
pub fn connect_families(family: Family, bar: Family, params: &Params, n: usize) -> Result<ExactMatrix> {
    connection(&leading_matrix(family, params, n)?, &leading_matrix(bar, params, n)?)
}

/// Number of entries where C·𝐏̄_n(point) differs from 𝐏_n(point).
pub fn connection_mismatches(family: Family, bar: Family, params: &Params, n: usize, points: &[Vec<C>]) -> Result<usize> {
    let c = connect_families(family, bar, params, n)?;
    let s = FamilySpec::new(family, params.clone())?;
    let sb = FamilySpec::new(bar, params.clone())?;
    let mut bad = 0;
    for pt in points {
        let pb = (0..=n).map(|k| sb.eval(&[n - k, k], pt)).collect::<Result<Vec<_>>>()?;
        let p = (0..=n).map(|k| s.eval(&[n - k, k], pt)).collect::<Result<Vec<_>>>()?;
        bad += c.mul_vec(&pb).iter().zip(&p).filter(|(a, b)| a != b).count();
    }
    Ok(bad)
}

fn opt_json(m: &Option<ExactMatrix>) -> Value {
    m.as_ref().map_or(Value::Null, |m| serde_json::to_value(m).expect("matrix json"))
}

/// One n of the recurrence as JSON.
pub fn abc_json(rec: &Recurrence, n: usize) -> Result<Value> {
    let abc = rec.abc(n)?;
    let blk = &rec.blocks[n];
    Ok(json!({
        "n": n,
        "A1": abc.a[0], "A2": abc.a[1],
        "B1": abc.b[0], "B2": abc.b[1],
        "C1": opt_json(&abc.c[0]), "C2": opt_json(&abc.c[1]),
        "Gnn": blk.gnn,
        "Gn,n-1": opt_json(&blk.gn1),
        "Gn,n-2": opt_json(&blk.gn2),
        "Sn": opt_json(&blk.sn),
        "Tn": opt_json(&blk.tn),
    }))
}
