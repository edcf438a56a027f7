//! Existence machinery built on multiples of the gonality pencil of a
//! general k-gonal curve: the dimension condition for |n g^1_k + D|, the
//! residual-web recipes split by e mod 3, and the classifier for
//! compounded degree-10/11 webs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::castelnuovo_pi;

/// dim |n g^1_k + D| = n for a general k-gonal curve, deg D = m, provided
/// 2k - g - 2 < 0 and g >= 2m + n(k-1). Both inequalities are checked; the
/// requirement that no pencil divisor sits under D is a genericity
/// assumption the caller records.
pub fn ckm_condition(g: i64, k: i64, m: i64, n: i64) -> bool {
    debug_assert!(k >= 2 && m >= 0 && n >= 0);
    2 * k - g - 2 < 0 && g >= 2 * m + n * (k - 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub name: String,
    pub holds: bool,
}

/// A verified construction of a very ample web |K - 3 g^1_k - (extra
/// points)| of degree g + r - 4 and dimension r on a general k-gonal curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GonalRecipe {
    pub g: i64,
    pub r: i64,
    /// Residual degree g - r + 2 = 3k + extra_points.
    pub e: i64,
    /// Gonality of the carrier curve.
    pub k: i64,
    /// Multiple of the pencil used (always 3 here).
    pub n: i64,
    pub extra_points: i64,
    pub series_degree: i64,
    pub series_dim: i64,
    pub conditions: Vec<ConditionCheck>,
    /// Open genericity requirements with no finite check.
    pub assumptions: Vec<String>,
}

impl GonalRecipe {
    pub fn is_valid(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }
}

/// Recipe for a component witness of degree g + r - 4 in P^r, when the
/// congruence class of e = g - r + 2 admits one: extra_points = e mod 3,
/// k = (e - extra_points)/3, needing k >= 4 and r large enough for the
/// extra-point case (r >= 3, 4, 5 for 0, 1, 2 extra points).
pub fn existence_recipe(g: i64, r: i64) -> Option<GonalRecipe> {
    if r < 3 {
        return None;
    }
    let e = g - r + 2;
    if e < 12 {
        return None;
    }
    let extra = e.rem_euclid(3);
    let k = (e - extra) / 3;
    let min_r = 3 + extra;
    if r < min_r {
        return None;
    }
    let m = 2 + extra;
    let conditions = vec![
        ConditionCheck {
            name: format!("rho({k},{g},1) = {} < 0", 2 * k - g - 2),
            holds: 2 * k - g - 2 < 0,
        },
        ConditionCheck {
            name: format!("g = {g} >= 2m + 3(k-1) = {}", 2 * m + 3 * (k - 1)),
            holds: g >= 2 * m + 3 * (k - 1),
        },
        ConditionCheck {
            name: format!("k = {k} >= 4"),
            holds: k >= 4,
        },
    ];
    let mut assumptions =
        vec!["carrier curve is general in the k-gonal locus".to_string()];
    if extra == 1 {
        assumptions.push("subtracted point q chosen general on the curve".to_string());
    }
    if extra == 2 {
        assumptions
            .push("subtracted points q + q' not contained in one pencil fiber".to_string());
    }
    let recipe = GonalRecipe {
        g,
        r,
        e,
        k,
        n: 3,
        extra_points: extra,
        series_degree: g + r - 4,
        series_dim: r,
        conditions,
        assumptions,
    };
    recipe.is_valid().then_some(recipe)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompoundedCase {
    /// Covering degree.
    pub k: i64,
    /// Degree of the image curve in P^3.
    pub f: i64,
    pub interpretation: String,
}

fn interpret(k: i64, f: i64) -> String {
    match (k, f) {
        (2, 3) => "hyperelliptic".to_string(),
        (2, 4) => "bielliptic".to_string(),
        (2, 5) => "double cover of a genus-2 curve".to_string(),
        (3, 3) => "trigonal, web has non-empty base locus".to_string(),
        _ => format!("degree-{k} cover of a degree-{f} space curve"),
    }
}

/// All (covering degree, image degree) splittings of a compounded web of
/// degree e: k >= 2, f >= 3, k*f <= e. Listed with k ascending and f
/// descending within each k.
pub fn compounded_cases(e: i64) -> Result<Vec<CompoundedCase>> {
    if e < 6 {
        return Err(Error::Precondition(format!(
            "compounded splittings need e >= 6, got {e}"
        )));
    }
    let mut out = Vec::new();
    for k in 2..=e / 3 {
        for f in (3..=e / k).rev() {
            out.push(CompoundedCase { k, f, interpretation: interpret(k, f) });
        }
    }
    Ok(out)
}

/// For webs of degree e in {10, 11}: when g exceeds the Castelnuovo bound
/// pi(e, 3), every such web is compounded, and a compounded web of that
/// degree has a residual that is never very ample. True means the family
/// is empty.
pub fn compounded_excludes_very_ample(e: i64, g: i64, r: i64) -> Result<bool> {
    if e != 10 && e != 11 {
        return Err(Error::Scope(format!(
            "compounded exclusion is established only for e in {{10, 11}}, got {e}"
        )));
    }
    if e != g - r + 2 {
        return Err(Error::Scope(format!(
            "series degree {e} inconsistent with (g,r) = ({g},{r})"
        )));
    }
    Ok(g > castelnuovo_pi(e, 3)?)
}
