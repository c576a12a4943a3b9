use std::fmt;

use serde::Serialize;

use super::{PowerSeries, SeriesRing, TruncatedSeries};
use crate::arith::{qth_root_in_prime_field, Field, PrimeField};
use crate::error::{Error, Result};
use crate::poly::{factor, squarefree_decomposition, Polynomial, UniPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchKind {
    Smooth,
    Cusp,
    NodeBranch,
}

/// A branch `t -> (x(t), y(t))` of the germ `g = 0` at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchParametrization {
    pub kind: BranchKind,
    pub x: PowerSeries,
    pub y: PowerSeries,
    pub germ: Polynomial<PrimeField>,
}

impl BranchParametrization {
    /// `g(x(t), y(t))`, zero to the precision of the branch.
    pub fn residual(&self) -> PowerSeries {
        pullback(&self.germ, &self.x, &self.y)
    }

    fn swapped(self) -> Self {
        Self { x: self.y, y: self.x, germ: self.germ.swap_vars(), kind: self.kind }
    }
}

impl fmt::Display for BranchParametrization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: x = {}, y = {}", self.kind, self.x, self.y)
    }
}

/// `h(x(t), y(t))`.
pub fn pullback(h: &Polynomial<PrimeField>, x: &PowerSeries, y: &PowerSeries) -> PowerSeries {
    let field = *h.field();
    let n = x.precision().min(y.precision());
    let powers = |s: &PowerSeries, e: u32| {
        let mut out = vec![PowerSeries::constant(field, 1, n)];
        for k in 1..=e as usize {
            out.push(&out[k - 1] * s);
        }
        out
    };
    let xp = powers(x, h.degree_in(Var::X).unwrap_or(0));
    let yp = powers(y, h.degree_in(Var::Y).unwrap_or(0));
    let mut acc = PowerSeries::zero(field, n);
    for (&(i, j), &c) in h.terms() {
        acc = &acc + &(&xp[i as usize] * &yp[j as usize]).scale(c);
    }
    acc
}

fn partial(g: &Polynomial<PrimeField>, v: Var) -> Polynomial<PrimeField> {
    let f = *g.field();
    let terms = g.terms().filter_map(|(&(i, j), &c)| match v {
        Var::X if i > 0 => Some(((i - 1, j), f.mul(&c, &f.elem(i as i64)))),
        Var::Y if j > 0 => Some(((i, j - 1), f.mul(&c, &f.elem(j as i64)))),
        _ => None,
    });
    Polynomial::from_terms(f, terms)
}

/// `y = phi(t)` with `g(t, phi(t)) = 0`, assuming `g_y(0, 0) != 0`.
fn solve_for_y(g: &Polynomial<PrimeField>, n: u32) -> Result<PowerSeries> {
    let field = *g.field();
    let x = PowerSeries::t(field, n);
    let gy = partial(g, Var::Y);
    let mut phi = PowerSeries::zero(field, n);
    let mut k = 1;
    while k < 2 * n {
        let step = &pullback(g, &x, &phi) * &pullback(&gy, &x, &phi).inverse()?;
        phi = &phi - &step;
        k *= 2;
    }
    Ok(phi)
}

/// Branches of a germ in the catalogue: smooth (nonzero linear part),
/// the node `a y^2 + P(x)` with `-P/a = x^2 w`, `w(0)` a nonzero square,
/// and the cusp `y^2 - x^3`, each up to exchanging `x` and `y`.
pub fn germ_parametrize(g: &Polynomial<PrimeField>, hint: Option<BranchKind>, n: u32) -> Result<Vec<BranchParametrization>> {
    if g.is_zero() {
        return Err(Error::ZeroElement);
    }
    if g.coeff(0, 0) != 0 {
        return Err(Error::Precondition("germ does not pass through the origin".into()));
    }
    let branches = match g.order() {
        Some(1) => vec![smooth_branch(g, n)?],
        Some(2) => match singular_branches(g, n)? {
            Some(b) => b,
            None => singular_branches(&g.swap_vars(), n)?
                .ok_or(Error::UnsupportedSingularity)?
                .into_iter()
                .map(BranchParametrization::swapped)
                .collect(),
        },
        _ => return Err(Error::UnsupportedSingularity),
    };
    if let Some(kind) = hint {
        if branches[0].kind != kind {
            return Err(Error::Precondition(format!("germ is {:?}, not {kind:?}", branches[0].kind)));
        }
    }
    debug_assert!(branches.iter().all(|b| b.residual().is_zero()));
    Ok(branches)
}

fn smooth_branch(g: &Polynomial<PrimeField>, n: u32) -> Result<BranchParametrization> {
    let field = *g.field();
    if g.coeff(0, 1) != 0 {
        let y = solve_for_y(g, n)?;
        Ok(BranchParametrization { kind: BranchKind::Smooth, x: PowerSeries::t(field, n), y, germ: g.clone() })
    } else {
        let x = solve_for_y(&g.swap_vars(), n)?;
        Ok(BranchParametrization { kind: BranchKind::Smooth, x, y: PowerSeries::t(field, n), germ: g.clone() })
    }
}

fn singular_branches(g: &Polynomial<PrimeField>, n: u32) -> Result<Option<Vec<BranchParametrization>>> {
    let field = *g.field();
    let a = g.coeff(0, 2);
    if a == 0 || g.terms().any(|(&(i, j), _)| j > 0 && (i, j) != (0, 2)) {
        return Ok(None);
    }
    let monic = g.scale(&field.inv(&a).expect("nonzero"));
    let t = PowerSeries::t(field, n);
    let cusp = Polynomial::from_terms(field, [((0, 2), 1), ((3, 0), field.elem(-1))]);
    if monic == cusp {
        let b = BranchParametrization { kind: BranchKind::Cusp, x: t.pow(2), y: t.pow(3), germ: g.clone() };
        return Ok(Some(vec![b]));
    }
    // monic = y^2 - x^2 w(x)
    let w: Vec<u64> = (0..n as u64 + 2).map(|k| field.neg(&monic.coeff(k as u32 + 2, 0))).collect();
    if w[0] == 0 {
        return Ok(None);
    }
    let w = PowerSeries::new(field, w, n);
    let h = w.qth_root(2, None).map_err(|_| Error::Unsupported("node tangents are not defined over F_p".into()))?;
    let y = (&t * &h).truncate(n);
    let branch = |y: PowerSeries| BranchParametrization { kind: BranchKind::NodeBranch, x: t.clone(), y, germ: g.clone() };
    Ok(Some(vec![branch(y.clone()), branch(-&y)]))
}

/// The two factors `y - x h(x)` and `y + x h(x)` of a node
/// `y^2 - x^2 w(x)` in `k[[x, y]]`, with `h = sqrt(w)`.
pub fn split_node(g: &Polynomial<PrimeField>, n: u32) -> Result<[TruncatedSeries; 2]> {
    let branches = germ_parametrize(g, Some(BranchKind::NodeBranch), n)?;
    if branches[0].x != PowerSeries::t(*g.field(), n) {
        return Err(Error::Unsupported("node with x and y exchanged".into()));
    }
    let field = *g.field();
    let factor = |b: &BranchParametrization| {
        let terms = b.y.coeffs().iter().enumerate().map(|(k, &c)| ((k as u32, 0), field.neg(&c)));
        TruncatedSeries::from_terms(field, SeriesRing::Local, n, terms.chain([((0, 1), 1)]))
    };
    Ok([factor(&branches[0]), factor(&branches[1])])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PowerVerdict {
    PowerInLocalRing,
    PowerOnlyInNormalization,
    NotPower,
}

impl PowerVerdict {
    pub fn is_power(self) -> bool {
        self == Self::PowerInLocalRing
    }
}

impl fmt::Display for PowerVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::PowerInLocalRing => "power_in_local_ring",
            Self::PowerOnlyInNormalization => "power_only_in_normalization",
            Self::NotPower => "not_power",
        })
    }
}

/// A branch through a closed point of the residue curve, with the pulled
/// back residue and its chosen `q`-th root.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchRoot {
    pub point: (u64, u64),
    pub branch: BranchParametrization,
    pub pullback: PowerSeries,
    pub root: Option<PowerSeries>,
}

impl BranchRoot {
    /// The branch in absolute coordinates.
    pub fn coordinates(&self) -> (PowerSeries, PowerSeries) {
        let f = self.pullback.field();
        let shift = |s: &PowerSeries, c: u64| s + &PowerSeries::constant(f, c, s.precision());
        (shift(&self.branch.x, self.point.0), shift(&self.branch.y, self.point.1))
    }
}

/// How the quotient ring was analysed.
#[derive(Clone, Debug, PartialEq)]
pub enum QuotientModel {
    /// Finitely many closed points, each resolved into branches.
    Branches(Vec<BranchRoot>),
    /// The modulus is the series variable itself, leaving the polynomial
    /// ring in the other variable.
    Polynomial { var: Var, residue: UniPoly<PrimeField>, root: Option<UniPoly<PrimeField>> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GermAnalysis {
    pub verdict: PowerVerdict,
    pub witness: Option<String>,
    pub model: QuotientModel,
}

fn translate(h: &Polynomial<PrimeField>, point: (u64, u64)) -> Polynomial<PrimeField> {
    let f = *h.field();
    let shifted = |v: Var, c: u64| &Polynomial::var(f, v) + &Polynomial::constant(f, c);
    let (sx, sy) = (shifted(Var::X, point.0), shifted(Var::Y, point.1));
    let mut out = Polynomial::zero(f);
    for (&(i, j), &c) in h.terms() {
        out = &out + &(&sx.pow(i) * &sy.pow(j)).scale(&c);
    }
    out
}

/// Closed points of `g = 0` in the ring, all of which must be rational.
fn closed_points(g: &Polynomial<PrimeField>, ring: SeriesRing) -> Result<Option<Vec<(u64, u64)>>> {
    let field = *g.field();
    let v = match ring.series_var() {
        None => {
            if g.coeff(0, 0) != 0 {
                return Err(Error::Precondition("the modulus is a unit".into()));
            }
            return Ok(Some(vec![(0, 0)]));
        }
        Some(v) => v,
    };
    let fibre = g.specialize(v, &0);
    if fibre.is_zero() {
        return Ok(None);
    }
    if fibre.is_constant() {
        return Err(Error::Precondition("the modulus is a unit".into()));
    }
    let mut points = Vec::new();
    for (p, _) in factor(&fibre, 0).factors {
        if p.degree() != Some(1) {
            return Err(Error::Unsupported(format!("closed point {} is not rational over F_{}", p, field.modulus())));
        }
        let a = field.neg(&p.coeff(0));
        points.push(if v == Var::Y { (a, 0) } else { (0, a) });
    }
    Ok(Some(points))
}

/// A `q`-th root of `a` in `k[v]`, if there is one.
fn polynomial_qth_root(a: &UniPoly<PrimeField>, q: u32) -> Option<UniPoly<PrimeField>> {
    let field = *a.field();
    let c = qth_root_in_prime_field(&field, a.lc(), q as u64)?;
    let mut root = UniPoly::constant(field, c);
    for (p, m) in squarefree_decomposition(&a.monic()) {
        if m % q != 0 {
            return None;
        }
        root = &root * &p.pow(m / q);
    }
    Some(root)
}

/// Whether `f` is a `q`-th power in the ring modulo `g`, by pulling `f`
/// back along every branch of `g = 0`. When it is, a `q`-th root exists in
/// the normalization; it lies in the local ring always at smooth points,
/// at a cusp iff it has no `t^1` term, and at a node iff the roots on the
/// two branches agree at `t = 0` up to a `q`-th root of unity.
pub fn qth_power_in_germ(
    f: &Polynomial<PrimeField>,
    g: &Polynomial<PrimeField>,
    ring: SeriesRing,
    q: u32,
    n: u32,
) -> Result<GermAnalysis> {
    analyze(f, g, ring, q, n, 1)
}

/// As [`qth_power_in_germ`], with branches computed `stretch` times past
/// `n` so that certificates can read off more coefficients.
pub(crate) fn analyze(
    f: &Polynomial<PrimeField>,
    g: &Polynomial<PrimeField>,
    ring: SeriesRing,
    q: u32,
    n: u32,
    stretch: u32,
) -> Result<GermAnalysis> {
    let field = *g.field();
    if field.elem(q as i64) == 0 {
        return Err(Error::Precondition(format!("q = {q} is not invertible in F_{}", field.modulus())));
    }
    let Some(points) = closed_points(g, ring)? else {
        return polynomial_quotient(f, g, ring, q);
    };
    let mut roots = Vec::new();
    let mut witness = None;
    let mut normal_only = false;
    for point in points {
        let germ = translate(g, point);
        let local_f = translate(f, point);
        let mut found = Vec::new();
        for (k, branch) in germ_parametrize(&germ, None, n * stretch)?.into_iter().enumerate() {
            let u = pullback(&local_f, &branch.x, &branch.y);
            let m = u.order().ok_or(Error::NonCoprime)?;
            let lc = u.coeff(m);
            let root = if m % q != 0 {
                witness.get_or_insert(format!("t-order {m} on branch {k} at {point:?} is not divisible by {q}"));
                None
            } else if qth_root_in_prime_field(&field, lc, q as u64).is_none() {
                witness.get_or_insert(format!("leading coefficient {lc} on branch {k} at {point:?} is not a {q}-th power"));
                None
            } else {
                Some(u.shift_down(m)?.qth_root(q, None)?.shift_up(m / q))
            };
            found.push(BranchRoot { point, branch, pullback: u, root });
        }
        if found.iter().all(|b| b.root.is_some()) {
            if let Some(w) = align_roots(&mut found, q) {
                normal_only = true;
                witness.get_or_insert(w);
            }
        }
        roots.extend(found);
    }
    let verdict = if roots.iter().any(|b| b.root.is_none()) {
        PowerVerdict::NotPower
    } else if normal_only {
        PowerVerdict::PowerOnlyInNormalization
    } else {
        PowerVerdict::PowerInLocalRing
    };
    Ok(GermAnalysis { verdict, witness, model: QuotientModel::Branches(roots) })
}

/// Apply the membership rule at one point, adjusting node roots by a root
/// of unity so they agree at `t = 0`. Returns a witness on failure.
fn align_roots(branches: &mut [BranchRoot], q: u32) -> Option<String> {
    match branches[0].branch.kind {
        BranchKind::Smooth => None,
        BranchKind::Cusp => {
            let s = branches[0].root.as_ref().expect("root");
            (s.coeff(1) != 0).then(|| "t-order 1 not in local ring".to_string())
        }
        BranchKind::NodeBranch => {
            let f = branches[0].pullback.field();
            let a = branches[0].root.as_ref().expect("root").coeff(0);
            let b = branches[1].root.as_ref().expect("root").coeff(0);
            if a == b {
                return None;
            }
            let zeta = f.div(&a, &b)?;
            if f.pow(&zeta, q as u64) != 1 {
                return Some("roots on the two branches disagree at the node".into());
            }
            let s = branches[1].root.take().expect("root");
            branches[1].root = Some(s.scale(zeta));
            None
        }
    }
}

fn polynomial_quotient(f: &Polynomial<PrimeField>, g: &Polynomial<PrimeField>, ring: SeriesRing, q: u32) -> Result<GermAnalysis> {
    let v = ring.series_var().expect("mixed ring");
    if g.terms().count() != 1 || g.degree_in(v) != Some(1) || g.uses(v.other()) {
        return Err(Error::Unsupported("modulus vanishes on the whole closed fibre".into()));
    }
    let residue = f.specialize(v, &0);
    if residue.is_zero() {
        return Err(Error::NonCoprime);
    }
    let root = polynomial_qth_root(&residue, q);
    let (verdict, witness) = match root {
        Some(_) => (PowerVerdict::PowerInLocalRing, None),
        None => (PowerVerdict::NotPower, Some(format!("{} is not a {q}-th power in k[{}]", residue.display_var(v.other().name()), v.other().name()))),
    };
    Ok(GermAnalysis { verdict, witness, model: QuotientModel::Polynomial { var: v.other(), residue, root } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn poly(text: &str) -> Polynomial<PrimeField> {
        parse_polynomial(text, &PrimeField::new(13)).unwrap()
    }

    #[test]
    fn catalogue() {
        let b = germ_parametrize(&poly("y^2 - x*(x^2 - 1)"), None, 8).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].kind, BranchKind::Smooth);
        assert_eq!(b[0].y, PowerSeries::t(PrimeField::new(13), 8));
        assert_eq!(b[0].x.coeff(2), 12);
        let c = germ_parametrize(&poly("y^2 - x^3"), None, 8).unwrap();
        assert_eq!((c[0].x.order(), c[0].y.order()), (Some(2), Some(3)));
        let a = germ_parametrize(&poly("x"), None, 4).unwrap();
        assert!(a[0].x.is_zero());
        let n = germ_parametrize(&poly("y^2 - x^2*(x - 1)"), None, 8).unwrap();
        assert_eq!(n.len(), 2);
        assert!(n.iter().all(|b| b.residual().is_zero()));
        let swapped = germ_parametrize(&poly("x^2 - y^3"), None, 8).unwrap();
        assert_eq!(swapped[0].x.order(), Some(3));
        assert_eq!(germ_parametrize(&poly("y^3 - x^4"), None, 8), Err(Error::UnsupportedSingularity));
        assert_eq!(germ_parametrize(&poly("y^2 - x^5"), None, 8), Err(Error::UnsupportedSingularity));
    }

    #[test]
    fn verdicts() {
        let cusp = qth_power_in_germ(&poly("x"), &poly("y^2 - x^3"), SeriesRing::Local, 2, 16).unwrap();
        assert_eq!(cusp.verdict, PowerVerdict::PowerOnlyInNormalization);
        assert_eq!(cusp.witness.as_deref(), Some("t-order 1 not in local ring"));
        let smooth = qth_power_in_germ(&poly("x"), &poly("y^2 - x*(x^2 - 1)"), SeriesRing::Local, 2, 16).unwrap();
        assert_eq!(smooth.verdict, PowerVerdict::PowerInLocalRing);
        let node = qth_power_in_germ(&poly("x"), &poly("y^2 - x^2*(x - 1)"), SeriesRing::Local, 2, 16).unwrap();
        assert_eq!(node.verdict, PowerVerdict::NotPower);
        let unit = qth_power_in_germ(&poly("1 + x"), &poly("y^2 - x^2*(x - 1)"), SeriesRing::Local, 2, 16).unwrap();
        assert_eq!(unit.verdict, PowerVerdict::PowerInLocalRing);
    }

    #[test]
    fn mixed_rings() {
        let g = poly("y^2 - x*(x^2 - 1)");
        let y_adic = qth_power_in_germ(&poly("x"), &g, SeriesRing::YAdic, 2, 16).unwrap();
        assert_eq!(y_adic.verdict, PowerVerdict::PowerInLocalRing);
        match y_adic.model {
            QuotientModel::Branches(b) => assert_eq!(b.len(), 3),
            other => panic!("{other:?}"),
        }
        let x_adic = qth_power_in_germ(&g, &poly("x"), SeriesRing::XAdic, 2, 16).unwrap();
        assert!(matches!(x_adic.model, QuotientModel::Polynomial { .. }));
        assert_eq!(x_adic.verdict, PowerVerdict::PowerInLocalRing);
        let not = qth_power_in_germ(&poly("y"), &poly("x"), SeriesRing::XAdic, 2, 16).unwrap();
        assert_eq!(not.verdict, PowerVerdict::NotPower);
    }

    #[test]
    fn node_factors() {
        let g = poly("y^2 - x^2*(x - 1)");
        let [a, b] = split_node(&g, 16).unwrap();
        assert_eq!(&a * &b, TruncatedSeries::from_polynomial(&g, SeriesRing::Local, 16));
    }
}
