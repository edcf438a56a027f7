//! Smooth space curves on cubic surfaces: the bounded Diophantine
//! classification of their divisor classes, the 2K + C residual analysis,
//! and the genus tests that rule out singular cubics.

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::surfaces::{neg_curves, pa_blowup, BlowupClass};

/// One class a*l - sum b_i e_i on the smooth cubic surface S_6 realizing a
/// given space degree and genus. `b` is sorted non-increasing, one
/// representative per permutation orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubicClassSolution {
    pub cls: BlowupClass,
    /// Space degree 3a - sum b_i (hyperplane degree on the cubic).
    pub d: i64,
    /// Genus by adjunction.
    pub g: i64,
    /// cls - 3H when that difference is a (-1)-curve.
    pub line: Option<BlowupClass>,
    /// Number of distinct coefficient permutations in the orbit.
    pub orbit_size: i64,
}

/// Hyperplane class H = (3;1,1,1,1,1,1) of the anticanonically embedded
/// cubic surface.
pub fn hyperplane() -> BlowupClass {
    BlowupClass::new(3, vec![1; 6]).expect("rank 6 is valid")
}

fn orbit_size(b: &[i64]) -> i64 {
    let mut fact = [1i64; 7];
    for i in 1..7 {
        fact[i] = fact[i - 1] * i as i64;
    }
    let mut denom = 1;
    let mut run = 1;
    for i in 1..b.len() {
        if b[i] == b[i - 1] {
            run += 1;
        } else {
            denom *= fact[run];
            run = 1;
        }
    }
    denom *= fact[run];
    fact[6] / denom
}

/// Interval of `a` allowed by the Cauchy-Schwarz pruning bound
/// (3a - d)^2 <= 6(a^2 - (2g - 2 + d)), or `None` when the bound excludes
/// every integer.
pub fn schwartz_a_range(d: i64, g: i64) -> Option<(i64, i64)> {
    let c2 = 2 * g - 2 + d;
    let admissible = |a: i64| (3 * a - d) * (3 * a - d) <= 6 * (a * a - c2);
    let hits: Vec<i64> = (0..=2 * d + 2).filter(|&a| admissible(a)).collect();
    match (hits.first(), hits.last()) {
        (Some(&lo), Some(&hi)) => Some((lo, hi)),
        _ => None,
    }
}

/// Non-increasing 6-tuples b with sum = `sum`, square sum = `sq` and
/// 0 <= b_i <= cap.
fn tuples(sum: i64, sq: i64, cap: i64, pos: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if pos == 6 {
        if sum == 0 && sq == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let left = (6 - pos - 1) as i64;
    let hi = cap.min(sum);
    for v in (0..=hi).rev() {
        let s = sum - v;
        let q = sq - v * v;
        // remaining entries are <= v and >= 0
        if q < 0 || s > left * v || s < 0 {
            continue;
        }
        cur.push(v);
        tuples(s, q, v, pos + 1, cur, out);
        cur.pop();
    }
}

/// Every class on the smooth cubic surface with space degree d and genus g:
/// 3a - sum b_i = d and a^2 - sum b_i^2 = 2g - 2 + d, with b_i >= 0 sorted
/// non-increasing. The `a` range comes from [`schwartz_a_range`]; within it
/// the two symmetric functions of the b_i are enumerated exactly.
pub fn classify_cubic_classes(d: i64, g: i64) -> Result<Vec<CubicClassSolution>> {
    if d < 1 {
        return Err(Error::Precondition(format!("space degree must be >= 1, got {d}")));
    }
    if g < 0 {
        return Err(Error::Precondition(format!("genus must be >= 0, got {g}")));
    }
    let mut out = Vec::new();
    let Some((lo, hi)) = schwartz_a_range(d, g) else {
        return Ok(out);
    };
    let c2 = 2 * g - 2 + d;
    for a in lo..=hi {
        let sum = 3 * a - d;
        let sq = a * a - c2;
        if sum < 0 || sq < 0 {
            continue;
        }
        let mut bs = Vec::new();
        tuples(sum, sq, sum, 0, &mut Vec::with_capacity(6), &mut bs);
        bs.sort();
        for b in bs {
            let size = orbit_size(&b);
            let cls = BlowupClass::new(a, b)?;
            let sol = CubicClassSolution {
                line: line_decomposition(&cls),
                d,
                g: pa_blowup(&cls),
                orbit_size: size,
                cls,
            };
            debug_assert_eq!(sol.g, g);
            out.push(sol);
        }
    }
    Ok(out)
}

/// cls - 3H, returned when it is a (-1)-curve (one of the 27 lines).
pub fn line_decomposition(cls: &BlowupClass) -> Option<BlowupClass> {
    if cls.n() != 6 {
        return None;
    }
    let three_h = BlowupClass::new(9, vec![3; 6]).expect("rank 6 is valid");
    let diff = cls - &three_h;
    neg_curves(6).expect("rank 6 is valid").contains(&diff).then_some(diff)
}

/// Class cutting the residual of the hyperplane web on the curve:
/// K + C - H = 2K + C on the cubic.
pub fn cubic_residual(cls: &BlowupClass) -> Result<BlowupClass> {
    if cls.n() != 6 {
        return Err(Error::LatticeMismatch(cls.n(), 6));
    }
    let k = BlowupClass::canonical(6)?;
    Ok(&(&k + &k) + cls)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConeGenusTag {
    /// g = 1 + d(d-3)/6 - 2/3: the curve passes through the vertex.
    ThroughVertex,
    /// g = 1 + d(d-3)/6: the curve misses the vertex.
    OffVertex,
    /// Neither genus formula for curves on a normal cubic cone is met.
    Impossible,
}

/// Exact rational test of the two cone genus formulas.
pub fn cone_genus_test(d: i64, g: i64) -> ConeGenusTag {
    debug_assert!(d >= 3);
    let base = Rational64::from_integer(1) + Rational64::new(d * (d - 3), 6);
    let through = base - Rational64::new(2, 3);
    let g = Rational64::from_integer(g);
    if g == through {
        ConeGenusTag::ThroughVertex
    } else if g == base {
        ConeGenusTag::OffVertex
    } else {
        ConeGenusTag::Impossible
    }
}

/// Smallest k >= 1 with (2d - 3k - 2)(k - 1) = 2g, i.e. the fiber degree
/// of a curve of that genus on the non-normal ruled cubic; `None` when the
/// equation has no integer solution.
pub fn ruled_cubic_genus_solvable(d: i64, g: i64) -> Option<i64> {
    debug_assert!(d >= 3);
    (1..=(2 * d - 2) / 3).find(|&k| (2 * d - 3 * k - 2) * (k - 1) == 2 * g)
}

/// Dimension of the locus of n-fold covers of genus-h curves inside the
/// moduli of genus-g curves: 2g + (2n-3)(1-h) - 2.
pub fn covering_locus_dim(g: i64, n: i64, h: i64) -> i64 {
    2 * g + (2 * n - 3) * (1 - h) - 2
}

/// Dimension bookkeeping that excludes triple covers of elliptic curves:
/// the bound dim W^3_10 <= 10 - 2*3 - 2 = 2 together with the dimension of
/// the triple-cover locus, 2g - 2. Their sum is compared against lambda by
/// the census.
pub fn triple_cover_dim_bound(g: i64) -> (i64, i64) {
    debug_assert!(g >= 3);
    (10 - 2 * 3 - 2, covering_locus_dim(g, 3, 1))
}
