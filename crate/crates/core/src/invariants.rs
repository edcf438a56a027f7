//! Closed-form integer invariants of a triple (d, g, r): Brill-Noether
//! number, expected dimensions, index of speciality, Castelnuovo genus
//! bounds. Everything is exact `i64` arithmetic; overflow aborts.

use serde::Serialize;

use crate::error::{Error, Result};

/// Degree, genus and ambient projective dimension of a space-curve family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triple {
    pub d: i64,
    pub g: i64,
    pub r: i64,
}

impl Triple {
    pub fn new(d: i64, g: i64, r: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::Precondition(format!("degree must be >= 1, got {d}")));
        }
        if g < 0 {
            return Err(Error::Precondition(format!("genus must be >= 0, got {g}")));
        }
        if r < 1 {
            return Err(Error::Precondition(format!(
                "ambient dimension must be >= 1, got {r}"
            )));
        }
        Ok(Triple { d, g, r })
    }

    /// Index of speciality of the complete hyperplane series: g - d + r.
    pub fn alpha(&self) -> i64 {
        self.g - self.d + self.r
    }
}

impl std::fmt::Display for Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.d, self.g, self.r)
    }
}

/// Brill-Noether number rho(d,g,r) = g - (r+1)(g-d+r).
///
/// Defined for every triple; negative values are meaningful and common in
/// the special range this crate works in.
pub fn rho(t: Triple) -> i64 {
    t.g - (t.r + 1) * t.alpha()
}

/// lambda(d,g,r) = 3g - 3 + rho(d,g,r): lower bound for the dimension of
/// any component of the scheme of linear series G^r_d.
pub fn lambda(t: Triple) -> i64 {
    3 * t.g - 3 + rho(t)
}

/// Minimal possible dimension of a component of the Hilbert scheme:
/// lambda + dim PGL(r+1).
pub fn chi_min(t: Triple) -> i64 {
    lambda(t) + (t.r + 1) * (t.r + 1) - 1
}

/// Castelnuovo bound: maximal arithmetic genus of an integral non-degenerate
/// curve of degree d in P^r.
///
/// With m = floor((d-1)/(r-1)) and eps = d - 1 - m(r-1) the bound is
/// m(m-1)/2 * (r-1) + m*eps. Requires d >= r (otherwise no non-degenerate
/// curve exists) and r >= 3.
pub fn castelnuovo_pi(d: i64, r: i64) -> Result<i64> {
    if r < 3 {
        return Err(Error::Precondition(format!("pi(d,r) needs r >= 3, got r={r}")));
    }
    if d < r {
        return Err(Error::Precondition(format!(
            "pi(d,r) needs d >= r, got d={d}, r={r}"
        )));
    }
    let m = (d - 1) / (r - 1);
    let eps = d - 1 - m * (r - 1);
    Ok(m * (m - 1) / 2 * (r - 1) + m * eps)
}

/// Second Castelnuovo bound in P^3: maximal genus of an integral
/// non-degenerate curve of degree d not lying on a quadric surface.
/// Closed form floor(d(d-3)/6) + 1, valid for d >= 7.
pub fn castelnuovo_pi1_r3(d: i64) -> Result<i64> {
    if d < 7 {
        return Err(Error::Precondition(format!("pi_1(d,3) needs d >= 7, got {d}")));
    }
    Ok(d * (d - 3) / 6 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(d: i64, g: i64, r: i64) -> Triple {
        Triple::new(d, g, r).unwrap()
    }

    #[test]
    fn rho_examples() {
        // alpha = 0 forces rho = g
        assert_eq!(rho(t(10, 7, 3)), 7);
        // pencils: rho(k, g, 1) = 2k - g - 2
        assert_eq!(rho(t(5, 9, 1)), 2 * 5 - 9 - 2);
        assert_eq!(rho(t(10, 12, 3)), -8);
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda(t(10, 12, 3)), 25);
        assert_eq!(lambda(t(3, 0, 3)), -3); // g = 0, alpha = 0
        assert_eq!(lambda(t(12, 12, 4)), lambda(t(10, 12, 3)));
    }

    #[test]
    fn chi_min_examples() {
        assert_eq!(chi_min(t(8, 9, 3)), 32);
        assert_eq!(chi_min(t(10, 11, 3)), 40);
        assert_eq!(chi_min(t(10, 12, 3)), 40);
    }

    #[test]
    fn castelnuovo_examples() {
        assert_eq!(castelnuovo_pi(10, 3).unwrap(), 16);
        assert_eq!(castelnuovo_pi(11, 3).unwrap(), 20);
        assert_eq!(castelnuovo_pi(9, 3).unwrap(), 12);
        // d = 2r+3 is the extremal range g = r+7
        assert_eq!(castelnuovo_pi(15, 6).unwrap(), 13);
        assert!(castelnuovo_pi(2, 3).is_err());
        assert!(castelnuovo_pi(5, 2).is_err());
    }

    #[test]
    fn pi1_examples() {
        assert_eq!(castelnuovo_pi1_r3(10).unwrap(), 12);
        assert_eq!(castelnuovo_pi1_r3(11).unwrap(), 15);
        assert_eq!(castelnuovo_pi1_r3(9).unwrap(), 10);
        assert!(castelnuovo_pi1_r3(6).is_err());
    }

    #[test]
    fn rho_is_genus_on_alpha_zero_locus() {
        for r in 3..=15 {
            for g in 0..=50 {
                let tr = t(g + r, g, r);
                assert_eq!(tr.alpha(), 0);
                assert_eq!(rho(tr), g);
            }
        }
    }

    #[test]
    fn chi_minus_lambda_is_dim_pgl() {
        for r in 1..=20 {
            for (d, g) in [(1, 0), (7, 4), (30, 25), (11, 12)] {
                let tr = t(d, g, r);
                assert_eq!(chi_min(tr) - lambda(tr), (r + 1) * (r + 1) - 1);
            }
        }
    }

    #[test]
    fn pi_monotone_in_degree() {
        for r in 3..=12 {
            let mut prev = castelnuovo_pi(r, r).unwrap();
            for d in (r + 1)..=100 {
                let cur = castelnuovo_pi(d, r).unwrap();
                assert!(cur >= prev, "pi({d},{r}) = {cur} < pi({},{r}) = {prev}", d - 1);
                prev = cur;
            }
        }
    }

    #[test]
    fn pi1_bounded_by_pi_and_below_by_gruson_line() {
        for d in 7..=100 {
            let p1 = castelnuovo_pi1_r3(d).unwrap();
            assert!(p1 <= castelnuovo_pi(d, 3).unwrap());
            assert!(p1 >= (d - 1) * (d - 2) / 6);
        }
    }
}
