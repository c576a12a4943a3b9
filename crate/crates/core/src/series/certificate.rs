use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::germ::{analyze, BranchKind, BranchRoot, PowerVerdict, QuotientModel};
use super::{PowerSeries, SeriesRing, TruncatedSeries};
use crate::arith::{Field, PrimeField};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Var};

/// Which of the two operands is claimed to be a `q`-th power modulo the
/// other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// `f - s^q = g t`.
    ResidueOfF,
    /// `g - s^q = f t`.
    ResidueOfG,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ResidueOfF => "f - s^q = g*t",
            Self::ResidueOfG => "g - s^q = f*t",
        })
    }
}

/// `numer / denom` in `k(x, y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariateFraction {
    pub numer: Polynomial<PrimeField>,
    pub denom: Polynomial<PrimeField>,
}

impl fmt::Display for BivariateFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numer, self.denom)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CertificateBody {
    /// Congruence modulo the `N`-th power of the ring's ideal.
    Series { s: TruncatedSeries, t: TruncatedSeries },
    /// Exact identity of rational functions.
    Laurent { s: BivariateFraction, t: BivariateFraction },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidueCertificate {
    pub f: Polynomial<PrimeField>,
    pub g: Polynomial<PrimeField>,
    pub q: u32,
    pub ring: SeriesRing,
    pub precision: u32,
    pub orientation: Orientation,
    pub body: CertificateBody,
}

impl ResidueCertificate {
    /// `(a, b)` with the identity read as `a - s^q = b t`.
    pub fn operands(&self) -> (&Polynomial<PrimeField>, &Polynomial<PrimeField>) {
        match self.orientation {
            Orientation::ResidueOfF => (&self.f, &self.g),
            Orientation::ResidueOfG => (&self.g, &self.f),
        }
    }
}

impl fmt::Display for ResidueCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            CertificateBody::Series { s, t } => write!(f, "{} in {}: s = {s}, t = {t}", self.orientation, self.ring),
            CertificateBody::Laurent { s, t } => write!(f, "{} in k(x, y): s = {s}, t = {t}", self.orientation),
        }
    }
}

/// Whether `a - s^q - b t` vanishes: to precision `N` for series
/// certificates, exactly for Laurent ones.
pub fn verify_certificate(cert: &ResidueCertificate) -> bool {
    let (a, b) = cert.operands();
    match &cert.body {
        CertificateBody::Series { s, t } => {
            if s.ring() != cert.ring || t.ring() != cert.ring || s.precision() < cert.precision || t.precision() < cert.precision {
                return false;
            }
            let n = cert.precision;
            let a = TruncatedSeries::from_polynomial(a, cert.ring, n);
            let b = TruncatedSeries::from_polynomial(b, cert.ring, n);
            (&(&a - &s.pow(cert.q)) - &(&b * t)).truncate(n).is_zero()
        }
        CertificateBody::Laurent { s, t } => {
            if s.denom.is_zero() || t.denom.is_zero() {
                return false;
            }
            let sd = s.denom.pow(cert.q);
            let lhs = &(&(a * &sd) * &t.denom) - &(&s.numer.pow(cert.q) * &t.denom);
            (&lhs - &(&(b * &t.numer) * &sd)).is_zero()
        }
    }
}

/// An explicit `(s, t)` with `a - s^q = b t` to precision `n` in `ring`,
/// where `(a, b)` is `(f, g)` or `(g, f)` by `orientation`. The root `s`
/// is fixed on every branch of `b = 0` by Newton iteration, carried back
/// to a normal form modulo `b`, and `t` comes from exact division.
pub fn residue_certificate(
    f: &Polynomial<PrimeField>,
    g: &Polynomial<PrimeField>,
    ring: SeriesRing,
    q: u32,
    n: u32,
    orientation: Orientation,
) -> Result<ResidueCertificate> {
    let (a, b) = match orientation {
        Orientation::ResidueOfF => (f, g),
        Orientation::ResidueOfG => (g, f),
    };
    let first = analyze(a, b, ring, q, n, 1)?;
    if first.verdict != PowerVerdict::PowerInLocalRing {
        return Err(Error::NotAPower { witness: first.witness.unwrap_or_default() });
    }
    let s = match &first.model {
        QuotientModel::Polynomial { var, root, .. } => {
            let root = root.as_ref().expect("power has a root");
            TruncatedSeries::from_polynomial(&Polynomial::from_univariate(root, *var), ring, n)
        }
        QuotientModel::Branches(branches) => {
            let stretch = branches.iter().filter_map(|br| weight_order(br, ring)).max().unwrap_or(1) + 1;
            let QuotientModel::Branches(branches) = analyze(a, b, ring, q, n, stretch)?.model else {
                unreachable!("same modulus")
            };
            lift_root(&branches, b, ring, n)?
        }
    };
    let field = *b.field();
    let residual = &TruncatedSeries::from_polynomial(a, ring, n) - &s.pow(q);
    // The quotient is only determined below n - ord(b), but b times any
    // completion of it agrees to precision n, so the missing terms are zero.
    let t = residual.exact_div(&TruncatedSeries::from_polynomial(b, ring, n))?.assume_precision(n);
    debug_assert_eq!(s.field(), field);
    let cert = ResidueCertificate {
        f: f.clone(),
        g: g.clone(),
        q,
        ring,
        precision: n,
        orientation,
        body: CertificateBody::Series { s, t },
    };
    if !verify_certificate(&cert) {
        return Err(Error::Mismatch("constructed certificate failed verification".into()));
    }
    Ok(cert)
}

/// `t`-order on the branch of the variable whose powers define the ring's
/// ideal; `None` when that coordinate vanishes on the branch.
fn weight_order(br: &BranchRoot, ring: SeriesRing) -> Option<u32> {
    let (x, y) = (&br.branch.x, &br.branch.y);
    match ring {
        SeriesRing::Local => match (x.order(), y.order()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        },
        SeriesRing::YAdic => y.order(),
        SeriesRing::XAdic => x.order(),
    }
}

/// Monomials spanning the ring modulo `b` (Weierstrass division by the
/// variable in which `b` is regular of least order, or by the monic
/// polynomial variable in a mixed ring).
fn normal_form_basis(b: &Polynomial<PrimeField>, ring: SeriesRing, n: u32) -> Result<Vec<(u32, u32)>> {
    let lowest = |u: crate::poly::UniPoly<PrimeField>| u.coeffs().iter().position(|&c| c != 0).map(|k| k as u32);
    let (v, d) = match ring {
        SeriesRing::Local => {
            let dx = lowest(b.specialize(Var::Y, &0));
            let dy = lowest(b.specialize(Var::X, &0));
            match (dx, dy) {
                (Some(dx), Some(dy)) if dy < dx => (Var::Y, dy),
                (Some(dx), _) => (Var::X, dx),
                (None, Some(dy)) => (Var::Y, dy),
                (None, None) => return Err(Error::Unsupported("modulus is not regular in x or y".into())),
            }
        }
        SeriesRing::YAdic | SeriesRing::XAdic => {
            let v = ring.series_var().expect("mixed").other();
            let d = b.degree_in(v).unwrap_or(0);
            let top_is_constant = b.terms().filter(|(&(i, j), _)| if v == Var::X { i == d } else { j == d }).count() == 1
                && b.coeff(if v == Var::X { d } else { 0 }, if v == Var::X { 0 } else { d }) != 0;
            if d == 0 || !top_is_constant {
                return Err(Error::Unsupported(format!("modulus is not monic in {}", v.name())));
            }
            (v, d)
        }
    };
    let mut basis = Vec::new();
    for k in 0..d {
        for e in 0..n {
            let key = if v == Var::X { (k, e) } else { (e, k) };
            if ring.weight(key.0, key.1) < n {
                basis.push(key);
            }
        }
    }
    Ok(basis)
}

/// The element of the normal form whose pullback to each branch is the
/// chosen root there.
fn lift_root(branches: &[BranchRoot], b: &Polynomial<PrimeField>, ring: SeriesRing, n: u32) -> Result<TruncatedSeries> {
    let field = *b.field();
    let basis = normal_form_basis(b, ring, n)?;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for br in branches {
        let s = br.root.as_ref().expect("power has a root on every branch");
        let (x, y) = br.coordinates();
        let mut cache: BTreeMap<(u32, u32), PowerSeries> = BTreeMap::new();
        let columns: Vec<PowerSeries> = basis
            .iter()
            .map(|&(i, j)| cache.entry((i, j)).or_insert_with(|| &x.pow(i) * &y.pow(j)).clone())
            .collect();
        let limit = weight_order(br, ring).map_or(u32::MAX, |e| e.saturating_mul(n));
        let rows_here = limit.min(s.precision()).min(x.precision());
        for k in 0..rows_here {
            rows.push(columns.iter().map(|c| c.coeff(k)).collect::<Vec<_>>());
            rhs.push(s.coeff(k));
        }
    }
    let solution = solve_linear(field, rows, rhs)
        .ok_or_else(|| Error::Mismatch("branch roots do not come from one element of the ring".into()))?;
    Ok(TruncatedSeries::from_terms(field, ring, n, basis.into_iter().zip(solution)))
}

/// A solution of `M v = r` over `F_p` with free variables set to zero.
fn solve_linear(field: PrimeField, mut rows: Vec<Vec<u64>>, mut rhs: Vec<u64>) -> Option<Vec<u64>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = field.mul(v, &inv);
        }
        rhs[r] = field.mul(&rhs[r], &inv);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let m = rows[i][c];
                for k in 0..cols {
                    let sub = field.mul(&m, &rows[r][k]);
                    rows[i][k] = field.sub(&rows[i][k], &sub);
                }
                rhs[i] = field.sub(&rhs[i], &field.mul(&m, &rhs[r]));
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rhs[r..].iter().any(|&v| v != 0) {
        return None;
    }
    let mut out = vec![0; cols];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = rhs[i];
    }
    Some(out)
}

/// For the cusp `y^2 = x^3`, whose normalization is `k[[t]]` with
/// `t = y/x`: the exact identity `a - s^q = b t` with `s` a polynomial in
/// `t` read as a rational function. Requires the root on the branch to
/// terminate below precision `n`.
pub fn normalization_certificate(
    f: &Polynomial<PrimeField>,
    g: &Polynomial<PrimeField>,
    q: u32,
    n: u32,
    orientation: Orientation,
) -> Result<ResidueCertificate> {
    let (a, b) = match orientation {
        Orientation::ResidueOfF => (f, g),
        Orientation::ResidueOfG => (g, f),
    };
    let field = *b.field();
    let analysis = analyze(a, b, SeriesRing::Local, q, n, 1)?;
    if analysis.verdict == PowerVerdict::NotPower {
        return Err(Error::NotAPower { witness: analysis.witness.unwrap_or_default() });
    }
    let QuotientModel::Branches(branches) = &analysis.model else { unreachable!("local ring") };
    let br = match branches.as_slice() {
        [br] if br.branch.kind == BranchKind::Cusp && br.branch.x.order() == Some(2) => br,
        _ => return Err(Error::Unsupported("normalization certificates are built for the cusp y^2 = x^3".into())),
    };
    let s = br.root.as_ref().expect("power has a root");
    // x * t^k as a polynomial: t = y/x, t^2 = x, t^3 = y.
    let mut numer = Polynomial::zero(field);
    for (k, &c) in s.coeffs().iter().enumerate() {
        let k = k as u32;
        let key = match k {
            1 => (0, 1),
            _ if k % 2 == 0 => (k / 2 + 1, 0),
            _ => ((k - 1) / 2, 1),
        };
        numer.add_term(key.0, key.1, c);
    }
    let x = Polynomial::var(field, Var::X);
    let xq = x.pow(q);
    let residual = &(a * &xq) - &numer.pow(q);
    let (quot, rem) = residual.divmod(b, Var::Y)?;
    if !rem.is_zero() {
        return Err(Error::NotDivisible(format!("{residual} by {b}; the root does not terminate below t^{n}")));
    }
    let cert = ResidueCertificate {
        f: f.clone(),
        g: g.clone(),
        q,
        ring: SeriesRing::Local,
        precision: n,
        orientation,
        body: CertificateBody::Laurent {
            s: BivariateFraction { numer, denom: x },
            t: BivariateFraction { numer: quot, denom: xq },
        },
    };
    debug_assert!(verify_certificate(&cert));
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn poly(text: &str) -> Polynomial<PrimeField> {
        parse_polynomial(text, &PrimeField::new(13)).unwrap()
    }

    #[test]
    fn elliptic_curve_in_each_ring() {
        let (f, g) = (poly("x"), poly("y^2 - x*(x^2 - 1)"));
        for ring in [SeriesRing::Local, SeriesRing::YAdic, SeriesRing::XAdic] {
            let cert = residue_certificate(&f, &g, ring, 2, 16, Orientation::ResidueOfF).unwrap();
            assert!(verify_certificate(&cert), "{ring}");
        }
    }

    #[test]
    fn corrupted_certificate_fails() {
        let (f, g) = (poly("x"), poly("y^2 - x*(x^2 - 1)"));
        let mut cert = residue_certificate(&f, &g, SeriesRing::Local, 2, 16, Orientation::ResidueOfF).unwrap();
        if let CertificateBody::Series { t, .. } = &mut cert.body {
            let field = t.field();
            *t = &*t + &TruncatedSeries::from_terms(field, SeriesRing::Local, 16, [((1, 2), 1)]);
        }
        assert!(!verify_certificate(&cert));
    }

    #[test]
    fn hand_built_and_laurent() {
        // f = g t + s^2 with s = 1 + x, t = y
        let (g, s, t) = (poly("y^2 - x^3"), poly("1 + x"), poly("y"));
        let f = &(&g * &t) + &s.pow(2);
        let cert = ResidueCertificate {
            f,
            g: g.clone(),
            q: 2,
            ring: SeriesRing::Local,
            precision: 6,
            orientation: Orientation::ResidueOfF,
            body: CertificateBody::Series {
                s: TruncatedSeries::from_polynomial(&s, SeriesRing::Local, 6),
                t: TruncatedSeries::from_polynomial(&t, SeriesRing::Local, 6),
            },
        };
        assert!(verify_certificate(&cert));
        let cusp = normalization_certificate(&poly("x"), &g, 2, 16, Orientation::ResidueOfF).unwrap();
        let CertificateBody::Laurent { s, t } = &cusp.body else { panic!() };
        assert_eq!((s.to_string(), t.to_string()), ("(y)/(x)".to_string(), ("(12)/(x^2)".to_string())));
        assert!(verify_certificate(&cusp));
    }

    #[test]
    fn refusals_carry_witnesses() {
        let err = residue_certificate(&poly("x"), &poly("y^2 - x^3"), SeriesRing::Local, 2, 16, Orientation::ResidueOfF);
        assert_eq!(err, Err(Error::NotAPower { witness: "t-order 1 not in local ring".into() }));
        let err = residue_certificate(&poly("x"), &poly("y^2 - x^2*(x - 1)"), SeriesRing::Local, 2, 16, Orientation::ResidueOfF);
        assert!(matches!(err, Err(Error::NotAPower { .. })));
    }

    #[test]
    fn orientation_swaps_roles() {
        let (f, g) = (poly("y^2 - x*(x^2 - 1)"), poly("x"));
        let cert = residue_certificate(&f, &g, SeriesRing::Local, 2, 12, Orientation::ResidueOfG).unwrap();
        assert_eq!(cert.operands().0, &g);
        assert!(verify_certificate(&cert));
    }

    #[test]
    fn precision_is_monotone() {
        let (f, g) = (poly("x"), poly("y^2 - x*(x^2 - 1)"));
        for ring in [SeriesRing::Local, SeriesRing::YAdic, SeriesRing::XAdic] {
            let small = residue_certificate(&f, &g, ring, 2, 8, Orientation::ResidueOfF).unwrap();
            let large = residue_certificate(&f, &g, ring, 2, 12, Orientation::ResidueOfF).unwrap();
            let (CertificateBody::Series { s: s8, .. }, CertificateBody::Series { s: s12, .. }) = (&small.body, &large.body) else {
                panic!()
            };
            assert_eq!(&s12.truncate(8), s8, "{ring}");
        }
    }
}
