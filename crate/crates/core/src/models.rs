//! Candidate space-curve models on the smooth quadric for a residual web
//! of degree e and geometric genus g: bidegree, node count, base points,
//! the blow-up classes that resolve them, and Severi dimension bookkeeping.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::surfaces::{
    dim_linear_system_quadric, pa_quadric, BlowupClass, QuadricClass, MAX_BLOWUP_POINTS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurfaceKind {
    /// The model is smooth on the quadric itself.
    Quadric,
    /// The smooth model lives on a blow-up of the quadric (nodes or base
    /// points get blown up).
    BlowupOfQuadric,
}

/// One candidate model: an integral curve of bidegree `cls` with `delta`
/// nodes, plus `base_points` simple base points of the web away from the
/// image curve's singularities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelRecord {
    pub surface: SurfaceKind,
    pub cls: QuadricClass,
    pub delta: i64,
    pub base_points: i64,
    /// Total degree of the series (image degree plus base locus).
    pub e: i64,
    /// Geometric genus of the model.
    pub g: i64,
    /// Set when min(c,d) <= 2: the model maps onto a ruling with degree
    /// >= 2 or degenerates, so it cannot carry a birationally very ample
    /// web of this kind.
    pub compounded_or_degenerate: bool,
}

impl ModelRecord {
    pub(crate) fn new(cls: QuadricClass, delta: i64, base_points: i64, e: i64, g: i64) -> Self {
        let surface = if delta == 0 && base_points == 0 {
            SurfaceKind::Quadric
        } else {
            SurfaceKind::BlowupOfQuadric
        };
        ModelRecord {
            surface,
            cls,
            delta,
            base_points,
            e,
            g,
            compounded_or_degenerate: cls.a.min(cls.b) <= 2,
        }
    }

    /// Rank of the blow-up lattice the resolved model lives on.
    pub fn blowup_rank(&self) -> usize {
        (self.delta + self.base_points + 1) as usize
    }
}

pub const DEFAULT_BASE_POINT_CAP: i64 = 2;

/// All models of total degree e and genus g, smaller bidegree first within
/// each base-point budget. `(c,d)` runs over c <= d, c >= 1, c + d >= 4,
/// with delta = p_a(c,d) - g nodes; empty output is a valid answer.
pub fn enumerate_quadric_models(e: i64, g: i64) -> Result<Vec<ModelRecord>> {
    enumerate_quadric_models_with_cap(e, g, DEFAULT_BASE_POINT_CAP)
}

/// Same enumeration with an explicit base-point budget, for exploration.
pub fn enumerate_quadric_models_with_cap(
    e: i64,
    g: i64,
    base_point_cap: i64,
) -> Result<Vec<ModelRecord>> {
    if e < 4 {
        return Err(Error::Precondition(format!("series degree must be >= 4, got {e}")));
    }
    if g < 0 {
        return Err(Error::Precondition(format!("genus must be >= 0, got {g}")));
    }
    let mut out = Vec::new();
    for bp in 0..=base_point_cap {
        let image_degree = e - bp;
        for c in 1..=image_degree / 2 {
            let d = image_degree - c;
            if c + d < 4 {
                continue;
            }
            let pa = (c - 1) * (d - 1);
            let delta = pa - g;
            if delta < 0 {
                continue;
            }
            out.push(ModelRecord::new(QuadricClass::new(c, d), delta, bp, e, g));
        }
    }
    Ok(out)
}

/// Class of the smooth model on S_{delta+1} after blowing up one node and
/// then the preimages of the remaining delta-1 nodes: the first center has
/// multiplicity two on both exceptional directions, the rest stay nodes of
/// the intermediate transform.
pub fn proper_transform(m: &ModelRecord) -> Result<BlowupClass> {
    if m.delta < 1 {
        return Err(Error::Precondition(format!(
            "proper transform needs at least one node, model {} has none",
            m.cls
        )));
    }
    let n = (m.delta + 1) as usize;
    if n > MAX_BLOWUP_POINTS {
        return Err(Error::InvalidClass(format!(
            "resolving {} nodes leaves the rank-8 lattice range",
            m.delta
        )));
    }
    let (c, d) = (m.cls.a.min(m.cls.b), m.cls.a.max(m.cls.b));
    let mut b = vec![d - 2, c - 2];
    b.extend(std::iter::repeat(2).take(n - 2));
    BlowupClass::new(c + d - 2, b)
}

/// Full resolution including base points: nodes as in [`proper_transform`],
/// then each base point blown up as a simple point of the curve. Returns
/// `None` for the smooth base-point-free case (nothing to resolve).
pub fn resolved_class(m: &ModelRecord) -> Result<Option<BlowupClass>> {
    let n = m.blowup_rank();
    if n == 1 {
        return Ok(None);
    }
    if n > MAX_BLOWUP_POINTS {
        return Err(Error::InvalidClass(format!(
            "resolving {} nodes and {} base points leaves the rank-8 lattice range",
            m.delta, m.base_points
        )));
    }
    let (c, d) = (m.cls.a.min(m.cls.b), m.cls.a.max(m.cls.b));
    let cls = if m.delta >= 1 {
        let mut b = vec![d - 2, c - 2];
        b.extend(std::iter::repeat(2).take((m.delta - 1) as usize));
        b.extend(std::iter::repeat(1).take(m.base_points as usize));
        BlowupClass::new(c + d - 2, b)?
    } else {
        // only base points: the first one plays the plane-model role
        let mut b = vec![d - 1, c - 1];
        b.extend(std::iter::repeat(1).take((m.base_points - 1) as usize));
        BlowupClass::new(c + d - 1, b)?
    };
    Ok(Some(cls))
}

/// Divisor class cutting the residual of the web on the resolved curve:
/// K + C - (pullback of the quadric hyperplane), minus one exceptional
/// class per base point.
pub fn residual_class_blowup(curve_cls: &BlowupClass) -> Result<BlowupClass> {
    if curve_cls.n() < 2 {
        return Err(Error::Precondition(
            "residual class needs the two exceptional directions of a node blow-up".into(),
        ));
    }
    let k = BlowupClass::canonical(curve_cls.n())?;
    let mut hyper = vec![0; curve_cls.n()];
    hyper[0] = 1;
    hyper[1] = 1;
    let hyperplane = BlowupClass::new(2, hyper)?;
    Ok(&(&k + curve_cls) - &hyperplane)
}

/// Residual embedding class for a full model resolution, with the base
/// point twist folded in. `None` when the model never leaves the quadric.
pub fn residual_embedding_class(m: &ModelRecord) -> Result<Option<BlowupClass>> {
    let Some(curve) = resolved_class(m)? else {
        return Ok(None);
    };
    let mut res = residual_class_blowup(&curve)?;
    if m.base_points > 0 {
        let n = curve.n();
        let first_bp_slot = if m.delta >= 1 { (m.delta + 1) as usize } else { 0 };
        for j in 0..m.base_points as usize {
            let e = if m.delta >= 1 {
                BlowupClass::exceptional(n, first_bp_slot + j)?
            } else if j == 0 {
                // the blown-up base point is the first plane-model center
                let mut b = vec![0; n];
                b[0] = 1;
                b[1] = 1;
                BlowupClass::new(1, b)?
            } else {
                BlowupClass::exceptional(n, j + 1)?
            };
            res = &res - &e;
        }
    }
    Ok(Some(res))
}

/// Residual class of a smooth base-point-free model on the quadric:
/// K + C - (1,1) = (c-3, d-3).
pub fn residual_class_quadric(cls: QuadricClass) -> QuadricClass {
    QuadricClass::new(cls.a - 3, cls.b - 3)
}

/// A bidegree is very ample on the quadric exactly when both factors are
/// positive.
pub fn quadric_residual_very_ample(x: QuadricClass) -> bool {
    x.a >= 1 && x.b >= 1
}

/// Dimension of the nodal Severi variety inside |cls|: dim |cls| - delta.
pub fn severi_dim(cls: QuadricClass, delta: i64) -> Result<i64> {
    let pa = pa_quadric(cls)?;
    if delta < 0 || delta > pa {
        return Err(Error::Precondition(format!(
            "node count {delta} outside 0..={pa} for {cls}"
        )));
    }
    Ok(dim_linear_system_quadric(cls)? - delta)
}

/// Severi dimension at the level of webs, i.e. modulo Aut(P1 x P1).
pub fn glevel_dim(cls: QuadricClass, delta: i64) -> Result<i64> {
    Ok(severi_dim(cls, delta)? - 6)
}

/// Multisecant order of the ruling through a base point of a smooth model:
/// min(c, d). An order >= 3 certifies that projecting the residual
/// embedding from the base point produces a singular image. `None` for
/// non-curve classes.
pub fn secant_obstruction_base_point(cls: QuadricClass) -> Option<i64> {
    if cls.a < 1 || cls.b < 1 {
        return None;
    }
    Some(cls.a.min(cls.b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants;
    use crate::surfaces::{contracted_multisecant, intersect_blowup, is_very_ample, pa_blowup};

    fn q(a: i64, b: i64) -> QuadricClass {
        QuadricClass::new(a, b)
    }

    fn keys(models: &[ModelRecord]) -> Vec<(i64, i64, i64, i64)> {
        models.iter().map(|m| (m.base_points, m.cls.a, m.cls.b, m.delta)).collect()
    }

    #[test]
    fn model_lists_for_degree_ten() {
        assert_eq!(
            keys(&enumerate_quadric_models(10, 13).unwrap()),
            vec![(0, 4, 6, 2), (0, 5, 5, 3)]
        );
        assert_eq!(
            keys(&enumerate_quadric_models(10, 12).unwrap()),
            vec![(0, 3, 7, 0), (0, 4, 6, 3), (0, 5, 5, 4), (1, 4, 5, 0)]
        );
        assert_eq!(keys(&enumerate_quadric_models(10, 16).unwrap()), vec![(0, 5, 5, 0)]);
        assert!(enumerate_quadric_models(3, 0).is_err());
    }

    #[test]
    fn model_records_are_consistent() {
        for (e, g) in [(10, 12), (10, 13), (11, 12), (11, 14), (9, 8)] {
            for m in enumerate_quadric_models(e, g).unwrap() {
                assert_eq!(pa_quadric(m.cls).unwrap() - m.delta, m.g);
                assert_eq!(m.cls.a + m.cls.b + m.base_points, m.e);
                assert!(m.delta <= pa_quadric(m.cls).unwrap());
            }
        }
    }

    #[test]
    fn empty_beyond_castelnuovo() {
        for e in 4..=14 {
            let pi = invariants::castelnuovo_pi(e, 3).unwrap();
            for g in (pi + 1)..=(pi + 6) {
                assert!(enumerate_quadric_models(e, g).unwrap().is_empty(), "e={e}, g={g}");
            }
        }
    }

    #[test]
    fn transforms_of_the_two_degree_ten_families() {
        for t in 1..=4 {
            let m = ModelRecord::new(q(5, 5), t, 0, 10, 16 - t);
            let tr = proper_transform(&m).unwrap();
            let mut want = vec![3, 3];
            want.extend(std::iter::repeat(2).take((t - 1) as usize));
            assert_eq!(tr, BlowupClass::new(8, want).unwrap());
            assert_eq!(pa_blowup(&tr), m.g);
        }
        for s in 1..=3 {
            let m = ModelRecord::new(q(4, 6), s, 0, 10, 15 - s);
            let tr = proper_transform(&m).unwrap();
            let mut want = vec![4, 2];
            want.extend(std::iter::repeat(2).take((s - 1) as usize));
            assert_eq!(tr, BlowupClass::new(8, want).unwrap());
        }
        let smooth = ModelRecord::new(q(5, 5), 0, 0, 10, 16);
        assert!(proper_transform(&smooth).is_err());
    }

    #[test]
    fn residual_classes() {
        let r1 = residual_class_blowup(&"(8;3,3,2,2)".parse().unwrap()).unwrap();
        assert_eq!(r1, "(3;1,1,1,1)".parse().unwrap());
        let r2 = residual_class_blowup(&"(8;4,2,2,2)".parse().unwrap()).unwrap();
        assert_eq!(r2, "(3;2,0,1,1)".parse().unwrap());
        assert_eq!(residual_class_quadric(q(4, 6)), q(1, 3));
        assert_eq!(residual_class_quadric(q(3, 7)), q(0, 4));
        assert_eq!(residual_class_quadric(q(4, 5)), q(1, 2));
    }

    #[test]
    fn residual_degree_law() {
        // residual . curve = 2g - 2 - e on every base-point-free model
        for c in 1..=8 {
            for d in c..=8 {
                if c + d < 4 {
                    continue;
                }
                let pa = (c - 1) * (d - 1);
                for delta in 1..=pa.min(4) {
                    let g = pa - delta;
                    let e = c + d;
                    let m = ModelRecord::new(q(c, d), delta, 0, e, g);
                    let tr = proper_transform(&m).unwrap();
                    let res = residual_class_blowup(&tr).unwrap();
                    assert_eq!(
                        intersect_blowup(&res, &tr).unwrap(),
                        2 * g - 2 - e,
                        "(c,d)=({c},{d}), delta={delta}"
                    );
                    assert_eq!(pa_blowup(&tr), g);
                }
                // smooth path
                let res = residual_class_quadric(q(c, d));
                let g = pa;
                assert_eq!(
                    crate::surfaces::intersect_quadric(res, q(c, d)),
                    2 * g - 2 - (c + d)
                );
            }
        }
    }

    #[test]
    fn component_selection_for_degree_ten() {
        for t in 1..=4 {
            let m = ModelRecord::new(q(5, 5), t, 0, 10, 16 - t);
            let tr = proper_transform(&m).unwrap();
            assert!(is_very_ample(&residual_class_blowup(&tr).unwrap()), "delta={t}");
        }
        for s in 1..=3 {
            let m = ModelRecord::new(q(4, 6), s, 0, 10, 15 - s);
            let tr = proper_transform(&m).unwrap();
            let res = residual_class_blowup(&tr).unwrap();
            let witness = contracted_multisecant(&res, &tr).unwrap();
            assert_eq!(witness, BlowupClass::exceptional(tr.n(), 1).unwrap(), "delta={s}");
        }
    }

    #[test]
    fn base_point_resolutions() {
        // one node family with a base point: (5,5), 4 nodes, 1 base point
        let m = ModelRecord::new(q(5, 5), 4, 1, 11, 12);
        let cls = resolved_class(&m).unwrap().unwrap();
        assert_eq!(cls, "(8;3,3,2,2,2,1)".parse().unwrap());
        assert_eq!(pa_blowup(&cls), 12);
        let res = residual_embedding_class(&m).unwrap().unwrap();
        assert_eq!(res, "(3;1,1,1,1,1,1)".parse().unwrap());
        assert_eq!(intersect_blowup(&res, &cls).unwrap(), 11);

        // smooth model with a base point: (5,5) through one general point
        let m = ModelRecord::new(q(5, 5), 0, 1, 11, 16);
        let cls = resolved_class(&m).unwrap().unwrap();
        assert_eq!(cls, "(9;4,4)".parse().unwrap());
        assert_eq!(pa_blowup(&cls), 16);
        let res = residual_embedding_class(&m).unwrap().unwrap();
        assert_eq!(res, "(3;1,1)".parse().unwrap());
        assert_eq!(intersect_blowup(&res, &cls).unwrap(), 19);

        // nothing to resolve
        let m = ModelRecord::new(q(5, 5), 0, 0, 10, 16);
        assert_eq!(resolved_class(&m).unwrap(), None);
    }

    #[test]
    fn severi_dimensions() {
        assert_eq!(severi_dim(q(5, 5), 1).unwrap(), 34);
        assert_eq!(severi_dim(q(4, 6), 0).unwrap(), 34);
        assert_eq!(severi_dim(q(3, 4), 0).unwrap(), 19);
        assert!(severi_dim(q(5, 5), 17).is_err());
        assert_eq!(glevel_dim(q(5, 5), 1).unwrap(), 28);
        assert_eq!(glevel_dim(q(5, 6), 3).unwrap(), 32);
        assert_eq!(glevel_dim(q(4, 4), 0).unwrap(), 18);
    }

    #[test]
    fn secant_orders() {
        assert_eq!(secant_obstruction_base_point(q(4, 5)), Some(4));
        assert_eq!(secant_obstruction_base_point(q(2, 5)), Some(2));
        assert_eq!(secant_obstruction_base_point(q(4, 6)), Some(4));
        assert_eq!(secant_obstruction_base_point(q(0, 5)), None);
    }

    #[test]
    fn compounded_tagging() {
        let models = enumerate_quadric_models(10, 0).unwrap();
        for m in &models {
            assert_eq!(m.compounded_or_degenerate, m.cls.a.min(m.cls.b) <= 2, "{}", m.cls);
        }
        assert!(models.iter().any(|m| m.compounded_or_degenerate));
    }
}
