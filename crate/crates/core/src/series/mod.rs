//! Truncated power series over `F_p` and the local questions of the
//! two-dimensional case: is `f` a `q`-th power modulo `g` in `k[[x, y]]`,
//! `k[x][[y]]` or `k[y][[x]]`, and if so, which `(s, t)` witness it.
//!
//! `F_p` with `p = 1 (mod 4)` stands in for an algebraically closed field:
//! every root the catalogue germs need (`sqrt(-1)`, `q`-th roots of units
//! for `q | p - 1`) exists there. Results are congruences modulo the `N`-th
//! power of the ring's ideal; Newton iteration converges quadratically, so
//! any `N` is reachable.
//!
//! ```
//! use reciprocity::arith::PrimeField;
//! use reciprocity::poly::parse_polynomial;
//! use reciprocity::series::{qth_power_in_germ, PowerVerdict, SeriesRing};
//!
//! let k = PrimeField::new(13);
//! let f = parse_polynomial("x", &k).unwrap();
//! let cusp = parse_polynomial("y^2 - x^3", &k).unwrap();
//! let verdict = qth_power_in_germ(&f, &cusp, SeriesRing::Local, 2, 16).unwrap().verdict;
//! assert_eq!(verdict, PowerVerdict::PowerOnlyInNormalization);
//! ```

mod certificate;
mod germ;
mod hensel;
mod newton;
mod power_series;
mod truncated;

pub use certificate::{
    normalization_certificate, residue_certificate, verify_certificate, BivariateFraction, CertificateBody,
    Orientation, ResidueCertificate,
};
pub use germ::{
    germ_parametrize, pullback, qth_power_in_germ, split_node, BranchKind, BranchParametrization, BranchRoot,
    GermAnalysis, PowerVerdict, QuotientModel,
};
pub use hensel::{hensel_factor_lift, hensel_lift_auto, HenselFactorization};
pub use power_series::PowerSeries;
pub use truncated::{series_invert, series_qth_root, SeriesRing, TruncatedSeries};

/// Default precision `N`.
pub const DEFAULT_PRECISION: u32 = 16;
