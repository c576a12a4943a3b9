use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::UniPoly;
use crate::arith::{Rational, Rationals};

type QPoly = UniPoly<Rationals>;

/// A real root of a squarefree rational polynomial, pinned down by an open
/// interval `(lo, hi)` that contains no other root; neither endpoint is a
/// root.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatedRealRoot {
    poly: QPoly,
    lo: Rational,
    hi: Rational,
}

impl IsolatedRealRoot {
    /// Squarefree monic defining polynomial.
    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    /// The root exactly, when the defining polynomial is linear.
    pub fn exact_value(&self) -> Option<Rational> {
        if self.poly.degree() == Some(1) {
            return Some(-self.poly.coeff(0) / self.poly.coeff(1));
        }
        None
    }

    /// The same root described by a squarefree factor `p` of the defining
    /// polynomial that vanishes at it.
    pub(crate) fn with_poly(&self, p: QPoly) -> Self {
        Self { poly: p.monic(), lo: self.lo.clone(), hi: self.hi.clone() }
    }

    /// Halve the interval, keeping the root inside.
    pub fn refine(&mut self) {
        let chain = sturm_chain(&self.poly);
        let m = split_point(&self.poly, &self.lo, &self.hi);
        if count_in(&chain, &self.lo, &m) == 1 {
            self.hi = m;
        } else {
            self.lo = m;
        }
    }

    /// Whether `x` lies in the isolating interval.
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Midpoint of the isolating interval.
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }
}

impl std::fmt::Display for IsolatedRealRoot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.exact_value() {
            Some(_) => write!(f, "prime:{}", self.poly),
            None => write!(f, "root of {} in ({}, {})", self.poly, self.lo, self.hi),
        }
    }
}

pub fn squarefree_part(g: &QPoly) -> QPoly {
    if g.degree().unwrap_or(0) == 0 {
        return g.monic();
    }
    g.exact_div(&g.gcd(&g.derivative())).monic()
}

fn sturm_chain(g: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![g.clone(), g.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero");
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn variations(chain: &[QPoly], x: &Rational) -> usize {
    let signs: Vec<Ordering> =
        chain.iter().map(|p| p.eval(x).cmp(&Rational::zero())).filter(|s| *s != Ordering::Equal).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct roots in `(a, b]`.
fn count_in(chain: &[QPoly], a: &Rational, b: &Rational) -> usize {
    variations(chain, a) - variations(chain, b)
}

/// A point strictly inside `(lo, hi)` that is not a root of `g`, as close
/// to the midpoint as a short search allows.
fn split_point(g: &QPoly, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    let mut k = 2i64;
    loop {
        for j in 1..k {
            let t = Rational::new(j.into(), k.into());
            let m = lo + &width * &t;
            if !g.eval(&m).is_zero() {
                return m;
            }
        }
        k += 1;
    }
}

/// Every root has absolute value strictly below `1 + max |a_i / a_n|`.
fn cauchy_bound(g: &QPoly) -> Rational {
    let lc = g.lc();
    let max = g.coeffs()[..g.coeffs().len() - 1]
        .iter()
        .map(|c| (c / &lc).abs())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    Rational::one() + max
}

/// Isolate the distinct real roots of `g != 0` in increasing order.
pub fn sturm_isolate(g: &QPoly) -> Vec<IsolatedRealRoot> {
    let sf = squarefree_part(g);
    if sf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = sturm_chain(&sf);
    let b = cauchy_bound(&sf);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        match count_in(&chain, &lo, &hi) {
            0 => {}
            1 => out.push(IsolatedRealRoot { poly: sf.clone(), lo, hi }),
            _ => {
                let m = split_point(&sf, &lo, &hi);
                stack.push((m.clone(), hi));
                stack.push((lo, m));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Sign of `f` at the root, exactly.
pub fn sign_at_root(f: &QPoly, root: &IsolatedRealRoot) -> i8 {
    if f.is_zero() {
        return 0;
    }
    if let Some(v) = root.exact_value() {
        return sign(&f.eval(&v));
    }
    let h = f.gcd(&root.poly);
    if h.degree().unwrap_or(0) > 0 && count_in(&sturm_chain(&h), &root.lo, &root.hi) == 1 {
        return 0;
    }
    let fs = squarefree_part(f);
    if fs.degree().unwrap_or(0) == 0 {
        return sign(&f.lc());
    }
    let fchain = sturm_chain(&fs);
    let mut r = root.clone();
    while count_in(&fchain, &r.lo, &r.hi) > 0 {
        r.refine();
    }
    sign(&f.eval(&r.midpoint()))
}

pub(crate) fn sign(x: &Rational) -> i8 {
    match x.cmp(&Rational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}
