use super::{is_prime, Field, PrimeField};
use crate::error::{Error, Result};

/// A prime field together with a fixed primitive `q`-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootOfUnityContext {
    pub p: u64,
    pub q: u64,
    pub zeta: u64,
}

impl RootOfUnityContext {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        let zeta = find_qth_root_of_unity(p, q)?;
        Ok(Self { p, q, zeta })
    }
}

/// Smallest element of `F_p^*` of multiplicative order exactly `q`.
pub fn find_qth_root_of_unity(p: u64, q: u64) -> Result<u64> {
    if !is_prime(q) || !is_prime(p) || (p - 1) % q != 0 {
        return Err(Error::NoRootOfUnity { p, q });
    }
    let f = PrimeField::new(p);
    (2..p)
        .find(|z| f.pow(z, q) == 1)
        .ok_or(Error::NoRootOfUnity { p, q })
}

/// Smallest `b` with `b^q = a` in `F_p`, by exhaustive search.
pub fn qth_root_in_prime_field(field: &PrimeField, a: u64, q: u64) -> Option<u64> {
    field.elements().find(|b| field.pow(b, q) == a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity() {
        assert_eq!(find_qth_root_of_unity(7, 3), Ok(2));
        assert_eq!(find_qth_root_of_unity(5, 2), Ok(4));
        assert_eq!(find_qth_root_of_unity(13, 3), Ok(3));
        assert_eq!(find_qth_root_of_unity(3, 2), Ok(2));
        assert_eq!(find_qth_root_of_unity(7, 5), Err(Error::NoRootOfUnity { p: 7, q: 5 }));
    }

    #[test]
    fn root_of_unity_has_exact_order() {
        for (p, q) in [(7, 3), (11, 5), (13, 2), (13, 3), (31, 5), (43, 7), (101, 5)] {
            let f = PrimeField::new(p);
            let z = find_qth_root_of_unity(p, q).unwrap();
            assert_eq!(f.pow(&z, q), 1);
            assert_ne!(z, 1);
        }
    }

    #[test]
    fn square_root_of_minus_one_mod_13() {
        let f = PrimeField::new(13);
        assert_eq!(qth_root_in_prime_field(&f, 12, 2), Some(5));
        assert_eq!(qth_root_in_prime_field(&f, 2, 2), None);
    }
}
