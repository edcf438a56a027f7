//! The verdict pipeline: existence and irreducibility records for triples
//! (d, g, r) with small index of speciality, assembled from the exact
//! machinery of the other modules, with tri-state answers and citation
//! anchors on every record. Unknown stays unknown.

pub mod tables;

use serde::Serialize;

use crate::cubic::{
    classify_cubic_classes, cone_genus_test, cubic_residual, ruled_cubic_genus_solvable,
    triple_cover_dim_bound, ConeGenusTag, CubicClassSolution,
};
use crate::error::{Error, Result};
use crate::gonal::{compounded_excludes_very_ample, existence_recipe, GonalRecipe};
use crate::invariants::{castelnuovo_pi, chi_min, lambda, Triple};
use crate::liaison::{linkage_dimension_account, LiaisonStep};
use crate::models::{
    enumerate_quadric_models, glevel_dim, residual_class_quadric, residual_embedding_class,
    resolved_class, secant_obstruction_base_point, quadric_residual_very_ample, ModelRecord,
};
use crate::surfaces::{contracted_multisecant, expected_h0_blowup, is_very_ample, BlowupClass};

pub const SCHEMA: &str = "census/1";

/// Quoted dimensions of the residual Hilbert schemes the linkage accounts
/// consume: sextics of genus 3 and rational quintics in P^3.
pub const DIM_HILBERT_6_3_3: i64 = 24;
pub const DIM_HILBERT_5_0_3: i64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

/// Which piece of machinery backs a component record.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum ComponentModel {
    QuadricModel(ModelRecord),
    CubicClass(CubicClassSolution),
    GonalRecipe(GonalRecipe),
    Liaison(LiaisonStep),
}

/// One family of curves attached to a verdict. `is_component` records
/// whether the family is known to be (or not be) an irreducible component;
/// `dim` is the family dimension when the bookkeeping pins it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentRecord {
    pub description: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stratum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_locus: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<ComponentModel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<i64>,
    pub dim_expected: i64,
    pub is_component: TriState,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub schema: &'static str,
    pub triple: Triple,
    pub alpha: i64,
    pub exists: TriState,
    pub irreducible: TriState,
    pub components: Vec<ComponentRecord>,
    pub citations: Vec<String>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn open(t: Triple) -> Self {
        Verdict {
            schema: SCHEMA,
            triple: t,
            alpha: t.alpha(),
            exists: TriState::Unknown,
            irreducible: TriState::Unknown,
            components: Vec::new(),
            citations: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn cite(&mut self, anchor: &str) {
        self.citations.push(anchor.to_string());
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn settle_empty(&mut self, reason: impl Into<String>) {
        self.exists = TriState::No;
        self.irreducible = TriState::Unknown;
        self.components.clear();
        self.note(reason);
    }
}

fn pgl_dim(r: i64) -> i64 {
    (r + 1) * (r + 1) - 1
}

// ---------------------------------------------------------------------------
// component builders
// ---------------------------------------------------------------------------

fn stratum_label(m: &ModelRecord) -> String {
    format!("Sigma_{{|{}|,{}}}", m.cls, m.delta)
}

/// Family of curves cut out by a quadric model: dimension is the web-level
/// Severi dimension, plus one modulus per base point, plus PGL(r+1).
fn quadric_family(
    t: Triple,
    m: &ModelRecord,
    description: String,
    is_component: TriState,
) -> Result<ComponentRecord> {
    let dim = glevel_dim(m.cls, m.delta)? + m.base_points + pgl_dim(t.r);
    Ok(ComponentRecord {
        description,
        stratum: Some(stratum_label(m)),
        base_locus: Some(m.base_points > 0),
        model: Some(ComponentModel::QuadricModel(m.clone())),
        dim: Some(dim),
        dim_expected: chi_min(t),
        is_component,
    })
}

/// Family of curves on smooth cubic surfaces: 19 moduli of cubics plus the
/// linear system on one of them, transported to P^r.
fn cubic_family(
    t: Triple,
    sol: CubicClassSolution,
    description: String,
    is_component: TriState,
) -> Result<ComponentRecord> {
    let h0 = expected_h0_blowup(&sol.cls)?;
    let dim = h0 + 3 + pgl_dim(t.r);
    Ok(ComponentRecord {
        description,
        stratum: None,
        base_locus: None,
        model: Some(ComponentModel::CubicClass(sol)),
        dim: Some(dim),
        dim_expected: chi_min(t),
        is_component,
    })
}

fn liaison_family(
    t: Triple,
    s: i64,
    tt: i64,
    dim_residual: i64,
    description: String,
) -> Result<ComponentRecord> {
    let step = LiaisonStep::new(t.d, t.g, s, tt)?;
    let account = linkage_dimension_account(t.d, t.g, s, tt, dim_residual)?;
    Ok(ComponentRecord {
        description,
        stratum: None,
        base_locus: None,
        model: Some(ComponentModel::Liaison(step)),
        dim: Some(account.component_dim),
        dim_expected: chi_min(t),
        is_component: TriState::Yes,
    })
}

fn quoted_family(t: Triple, description: String, is_component: TriState) -> ComponentRecord {
    ComponentRecord {
        description,
        stratum: None,
        base_locus: None,
        model: None,
        dim: None,
        dim_expected: chi_min(t),
        is_component,
    }
}

fn gonal_family(t: Triple, recipe: GonalRecipe) -> ComponentRecord {
    let description = match recipe.extra_points {
        0 => format!("curve with a very ample |K - 3 g^1_{}|", recipe.k),
        1 => format!("curve with a very ample |K - 3 g^1_{} - q|", recipe.k),
        _ => format!("curve with a very ample |K - 3 g^1_{} - q - q'|", recipe.k),
    };
    ComponentRecord {
        description,
        stratum: None,
        base_locus: None,
        model: Some(ComponentModel::GonalRecipe(recipe)),
        dim: None,
        dim_expected: chi_min(t),
        is_component: TriState::Unknown,
    }
}

/// Fetch the enumerated model with the given bidegree and base-point count.
pub(crate) fn model(e: i64, g: i64, c: i64, d: i64, bp: i64) -> Result<ModelRecord> {
    enumerate_quadric_models(e, g)?
        .into_iter()
        .find(|m| m.cls.a == c && m.cls.b == d && m.base_points == bp)
        .ok_or_else(|| {
            Error::Precondition(format!("no ({c},{d}) model with {bp} base points for e={e}, g={g}"))
        })
}

pub(crate) fn residual_description(m: &ModelRecord, r: i64) -> Result<String> {
    Ok(match resolved_class(m)? {
        None => {
            let res = residual_class_quadric(m.cls);
            format!(
                "curve of bidegree {} on a smooth quadric, embedded into P^{} by {}",
                m.cls, r, res
            )
        }
        Some(cls) => {
            let res = residual_embedding_class(m)?.expect("resolved class exists");
            format!(
                "smooth member of {} on S_{}, embedded into P^{} by {}",
                cls,
                cls.n(),
                r,
                res
            )
        }
    })
}

// ---------------------------------------------------------------------------
// residual-web certificates (the alpha = 4 existence pipeline)
// ---------------------------------------------------------------------------

/// Very-ampleness status of the residual web of one model, decided inside
/// the reliable range of the line criterion (rank <= 6).
#[derive(Debug, Clone, PartialEq)]
pub enum ResidualStatus {
    /// The residual embedding class passes the very-ampleness test.
    VeryAmple,
    /// A contracted multisecant witness kills very ampleness on the curve.
    NotVeryAmple(Option<BlowupClass>),
    /// Rank 7 or 8 lattice, or a compounded model: the test is not relied on.
    Undecided,
}

pub fn residual_status(m: &ModelRecord) -> Result<ResidualStatus> {
    if m.compounded_or_degenerate {
        return Ok(ResidualStatus::Undecided);
    }
    match resolved_class(m) {
        Ok(None) => {
            let res = residual_class_quadric(m.cls);
            if quadric_residual_very_ample(res) {
                Ok(ResidualStatus::VeryAmple)
            } else {
                Ok(ResidualStatus::NotVeryAmple(None))
            }
        }
        Ok(Some(curve)) => {
            if curve.n() > 6 {
                return Ok(ResidualStatus::Undecided);
            }
            let res = residual_embedding_class(m)?.expect("resolved class exists");
            if is_very_ample(&res) {
                Ok(ResidualStatus::VeryAmple)
            } else if let Some(w) = contracted_multisecant(&res, &curve) {
                Ok(ResidualStatus::NotVeryAmple(Some(w)))
            } else {
                Ok(ResidualStatus::Undecided)
            }
        }
        // resolution leaves the rank-8 range: stay agnostic
        Err(Error::InvalidClass(_)) => Ok(ResidualStatus::Undecided),
        Err(e) => Err(e),
    }
}

/// First model of (e, g) whose residual web is certified very ample.
pub fn residual_certificate(e: i64, g: i64) -> Result<Option<ModelRecord>> {
    for m in enumerate_quadric_models(e, g)? {
        if residual_status(&m)? == ResidualStatus::VeryAmple {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Existence of the degree g+r-4 family in P^r for r >= 5, derived from
/// the construction machinery alone (no case table): Castelnuovo gate,
/// extremal curves, compounded exclusion plus quadric-model certificates
/// for e in {10, 11}, gonal recipes beyond.
pub fn alpha4_pipeline_exists(g: i64, r: i64) -> Result<TriState> {
    if r < 5 {
        return Err(Error::Precondition(format!(
            "the construction pipeline covers r >= 5, got r={r}"
        )));
    }
    let d = g + r - 4;
    if d < r {
        return Ok(TriState::No);
    }
    let pi = castelnuovo_pi(d, r)?;
    if g > pi {
        return Ok(TriState::No);
    }
    if g == pi {
        return Ok(TriState::Yes);
    }
    let e = g - r + 2;
    if e == 10 || e == 11 {
        if compounded_excludes_very_ample(e, g, r)? {
            return Ok(TriState::No);
        }
        return Ok(if residual_certificate(e, g)?.is_some() {
            TriState::Yes
        } else {
            TriState::Unknown
        });
    }
    if existence_recipe(g, r).is_some() {
        return Ok(TriState::Yes);
    }
    Ok(TriState::Unknown)
}

// ---------------------------------------------------------------------------
// verdict dispatch
// ---------------------------------------------------------------------------

/// Existence/irreducibility record for a triple with r >= 3. The
/// Castelnuovo gate runs first, so no verdict ever contradicts the genus
/// bound; the per-alpha classification fills in the rest.
pub fn verdict(t: Triple) -> Result<Verdict> {
    if t.r < 3 {
        return Err(Error::Precondition(format!(
            "census covers ambient dimension r >= 3, got r={}",
            t.r
        )));
    }
    let mut v = Verdict::open(t);

    if t.d < t.r {
        v.settle_empty(format!(
            "no non-degenerate curve of degree {} spans P^{}",
            t.d, t.r
        ));
        v.cite("castelnuovo:span");
        return Ok(v);
    }
    let pi = castelnuovo_pi(t.d, t.r)?;
    if t.g > pi {
        v.settle_empty(format!(
            "genus {} exceeds the Castelnuovo bound pi({},{}) = {}",
            t.g, t.d, t.r, pi
        ));
        v.cite("castelnuovo:genus-bound");
        return Ok(v);
    }

    match t.alpha() {
        0 => {
            v.exists = TriState::Yes;
            v.irreducible = TriState::Yes;
            v.cite("alpha0:nonempty-irreducible");
            v.note("existence encoded for every genus; no lower bound is imposed at alpha = 0");
        }
        1 => {
            if t.g >= t.r + 1 {
                v.exists = TriState::Yes;
                v.irreducible = TriState::Yes;
            } else {
                v.settle_empty("alpha = 1 families are empty for g <= r");
            }
            v.cite("alpha1:classification");
        }
        2 => {
            if t.g >= t.r + 3 {
                v.exists = TriState::Yes;
                v.irreducible = TriState::Yes;
            } else {
                v.settle_empty("alpha = 2 families are empty for g <= r+2");
            }
            v.cite("alpha2:classification");
        }
        3 => alpha3(&mut v)?,
        4 => alpha4(&mut v, pi)?,
        5 => alpha5(&mut v, pi)?,
        a => {
            v.exists = TriState::Unknown;
            v.irreducible = TriState::Unknown;
            v.note(format!("index of speciality {a} lies outside the classified range 0..=5"));
            v.cite("alpha-range:unclassified");
        }
    }
    debug_assert!(!v.citations.is_empty());
    debug_assert!(v.exists != TriState::No || v.components.is_empty());
    Ok(v)
}

fn alpha3(v: &mut Verdict) -> Result<()> {
    let (g, r) = (v.triple.g, v.triple.r);
    if g <= r + 4 {
        v.settle_empty("alpha = 3 families are empty for g <= r+4");
        v.cite("alpha3:classification");
        return Ok(());
    }
    if r <= 4 {
        v.exists = TriState::Unknown;
        v.irreducible = TriState::Unknown;
        v.note("the alpha = 3 classification is stated for r >= 5".to_string());
        v.cite("alpha3:classification");
        return Ok(());
    }
    if g == r + 6 && r >= 10 {
        v.settle_empty("alpha = 3, g = r+6 families are empty for r >= 10");
        v.cite("alpha3:classification");
        return Ok(());
    }
    v.exists = TriState::Yes;
    if g >= 2 * r + 3 {
        v.irreducible = TriState::Yes;
    } else {
        v.irreducible = TriState::Unknown;
        v.note(format!(
            "known reducible for almost every genus in [{}, {}]; the exceptional list is not pinned per triple",
            r + 5,
            2 * r + 2
        ));
    }
    v.cite("alpha3:classification");
    Ok(())
}

fn alpha4(v: &mut Verdict, pi: i64) -> Result<()> {
    let t = v.triple;
    let (g, r) = (t.g, t.r);
    // existence
    let exists = match r {
        3 => g >= 9,
        4 => g >= 11,
        _ => {
            if g <= r + 6 {
                false
            } else if g == r + 8 {
                r <= 8
            } else if g == r + 9 {
                r <= 11
            } else {
                true
            }
        }
    };
    if !exists {
        let reason = if r >= 5 && g == r + 8 {
            v.cite("alpha4:nonexistence:compounded(e=10)");
            debug_assert!(compounded_excludes_very_ample(10, g, r)?);
            "every degree-10 web of this genus is compounded, so no residual is very ample"
        } else if r >= 5 && g == r + 9 {
            v.cite("alpha4:nonexistence:compounded(e=11)");
            debug_assert!(compounded_excludes_very_ample(11, g, r)?);
            "every degree-11 web of this genus is compounded, so no residual is very ample"
        } else {
            v.cite("alpha4:nonexistence:small-genus");
            "below the existence threshold"
        };
        v.settle_empty(reason);
        return Ok(());
    }
    v.exists = TriState::Yes;

    match r {
        3 => alpha4_r3(v)?,
        4 => alpha4_r4(v)?,
        _ => {
            if g == r + 7 {
                debug_assert_eq!(g, pi);
                v.irreducible = if r == 5 { TriState::No } else { TriState::Yes };
                v.components.push(quoted_family(
                    t,
                    "extremal curves attaining the Castelnuovo genus bound".to_string(),
                    if r == 5 { TriState::Unknown } else { TriState::Yes },
                ));
                if r == 5 {
                    v.note("the extremal family splits into more than one component for r = 5");
                }
                v.cite("alpha4:extremal:irreducible-except-r5");
            } else if g == r + 8 {
                alpha4_r8_components(v)?;
                v.cite("alpha4:irreducibility:table(d=2r+4)");
            } else if g == r + 9 {
                v.irreducible = match r {
                    8 | 10 | 11 => TriState::Yes,
                    6 | 9 => TriState::No,
                    _ => TriState::Unknown,
                };
                for rec in alpha4_r9_families(t)? {
                    v.components.push(rec);
                }
                v.cite("alpha4:irreducibility:table(d=2r+5)");
            } else {
                // g >= r + 10: gonal recipe, components not inventoried
                let recipe = existence_recipe(g, r).ok_or_else(|| {
                    Error::Precondition(format!("expected a gonal recipe for ({g},{r})"))
                })?;
                for a in &recipe.assumptions {
                    v.note(a.clone());
                }
                v.components.push(gonal_family(t, recipe));
                v.irreducible = TriState::Unknown;
                v.cite("alpha4:existence:gonal-recipe(g>=r+10)");
            }
        }
    }
    Ok(())
}

fn alpha4_r3(v: &mut Verdict) -> Result<()> {
    let t = v.triple;
    match t.g {
        9 => {
            v.irreducible = TriState::Yes;
            let m = model(8, 9, 4, 4, 0)?;
            v.components.push(quadric_family(
                t,
                &m,
                "extremal curves of bidegree (4,4) on smooth quadric surfaces".to_string(),
                TriState::Yes,
            )?);
            v.cite("alpha4:r3:extremal-quadric(8,9,3)");
        }
        10 => {
            v.irreducible = TriState::No;
            let m = model(9, 10, 3, 6, 0)?;
            v.components.push(quadric_family(
                t,
                &m,
                "curves of bidegree (3,6) on smooth quadric surfaces".to_string(),
                TriState::Yes,
            )?);
            let mut ci = quoted_family(
                t,
                "complete intersections of two cubic surfaces".to_string(),
                TriState::Yes,
            );
            ci.dim = Some(crate::liaison::grassmann_dim(1, 19)?);
            v.components.push(ci);
            v.cite("alpha4:r3:two-families(9,10,3)");
        }
        11 => {
            v.irreducible = TriState::Yes;
            v.components.push(liaison_family(
                t,
                4,
                4,
                DIM_HILBERT_6_3_3,
                "general element directly linked to a sextic of genus 3 in a complete intersection of two quartics"
                    .to_string(),
            )?);
            // the second family lives on cubic surfaces: S_6 embedded
            // anticanonically, curve class (8;3,3,2,2,2,2), dim 39 < 40
            let m = model(10, 11, 5, 5, 0)?;
            let desc = residual_description(&m, 3)?;
            v.components.push(quadric_family(
                t,
                &m,
                format!("{desc} (does not form a component)"),
                TriState::No,
            )?);
            debug_assert!(!classify_cubic_classes(10, 11)?.is_empty());
            v.cite("alpha4:r3:liaison(10,11,3)");
        }
        12 => {
            v.irreducible = TriState::Yes;
            v.components.push(liaison_family(
                t,
                4,
                4,
                DIM_HILBERT_5_0_3,
                "general element directly linked to a rational quintic in a complete intersection of two quartics"
                    .to_string(),
            )?);
            let m = model(11, 12, 5, 5, 1)?;
            let desc = residual_description(&m, 3)?;
            v.components.push(quadric_family(
                t,
                &m,
                format!("{desc} (does not form a component)"),
                TriState::No,
            )?);
            v.cite("alpha4:r3:liaison(11,12,3)");
        }
        _ => {
            // g >= 13: existence via the second Castelnuovo bound criterion
            v.irreducible = TriState::Unknown;
            debug_assert!(t.g <= (t.g - 2) * (t.g - 3) / 6);
            v.note("existence of a smooth model certified by g <= (d-1)(d-2)/6 <= pi_1(d,3)");
            v.cite("alpha4:r3:pi1-existence-criterion");
        }
    }
    Ok(())
}

fn alpha4_r4(v: &mut Verdict) -> Result<()> {
    let t = v.triple;
    match t.g {
        11 => {
            v.irreducible = TriState::Yes;
            v.components.push(quoted_family(
                t,
                "curves in |3H + 2L| on a rational normal scroll in P^4 with a very ample |K - 3 g^1_3|"
                    .to_string(),
                TriState::Yes,
            ));
            v.note("nearly extremal: pi_1(11,4) < g < pi(11,4) forces the curve onto a scroll");
            v.cite("alpha4:r4:scroll(11,11,4)");
        }
        12 => {
            // residual webs of degree 10: full model analysis
            analyze_12_12_4(v)?;
            v.cite("alpha4:r4:cubic-exclusions(12,12,4)");
        }
        13 => {
            v.irreducible = TriState::Unknown;
            for rec in alpha4_r9_families(t)? {
                v.components.push(rec);
            }
            v.cite("alpha4:irreducibility:table(d=2r+5)");
        }
        16 | 19 => {
            v.irreducible = TriState::Unknown;
            v.components.push(quoted_family(
                t,
                "smooth curves on a Bordiga surface (cited construction)".to_string(),
                TriState::Unknown,
            ));
            v.cite("alpha4:r4:bordiga");
        }
        g if g >= 14 => {
            v.irreducible = TriState::Unknown;
            match existence_recipe(g, 4) {
                Some(recipe) => {
                    for a in &recipe.assumptions {
                        v.note(a.clone());
                    }
                    v.components.push(gonal_family(t, recipe));
                    v.cite("alpha4:existence:gonal-recipe(r=4)");
                }
                None => {
                    // e = g - 2 = 2 mod 3 and g >= 20: Brill-Noether range
                    debug_assert!(g >= 20);
                    v.note("existence via the principal component: rho(g,g,4) >= 0");
                    v.cite("alpha4:r4:brill-noether-range");
                }
            }
        }
        _ => unreachable!("existence dispatch guarantees g >= 11"),
    }
    Ok(())
}

/// g = r + 8, 5 <= r <= 8: every quadric model of (10, g) is certified or
/// excluded by the residual-web machinery; the certified ones are the
/// components.
fn alpha4_r8_components(v: &mut Verdict) -> Result<()> {
    let t = v.triple;
    let mut yes = 0;
    for m in enumerate_quadric_models(10, t.g)? {
        match residual_status(&m)? {
            ResidualStatus::VeryAmple => {
                yes += 1;
                let desc = residual_description(&m, t.r)?;
                v.components.push(quadric_family(t, &m, desc, TriState::Yes)?);
            }
            ResidualStatus::NotVeryAmple(witness) => {
                let extra = match witness {
                    Some(w) => format!("residual web contracts {w} met twice by the curve"),
                    None => "residual bidegree has a non-positive factor".to_string(),
                };
                v.note(format!("model {} delta={} excluded: {extra}", m.cls, m.delta));
            }
            ResidualStatus::Undecided => {
                v.note(format!("model {} delta={} left undecided", m.cls, m.delta));
            }
        }
    }
    v.irreducible = match yes {
        0 => TriState::Unknown,
        1 => TriState::Yes,
        _ => TriState::No,
    };
    Ok(())
}

/// The per-r family inventory for g = r + 9 (degree-11 residual webs),
/// including the base-point strata. Component statuses follow the known
/// classification; rows without a settled answer stay unknown.
pub(crate) fn alpha4_r9_families(t: Triple) -> Result<Vec<ComponentRecord>> {
    let (g, r) = (t.g, t.r);
    debug_assert_eq!(g, r + 9);
    let mut out = Vec::new();
    match r {
        3 => {
            let m = model(11, 12, 5, 5, 1)?;
            let desc = residual_description(&m, 3)?;
            out.push(quadric_family(t, &m, format!("{desc} (does not form a component)"), TriState::No)?);
            out.push(liaison_family(
                t,
                4,
                4,
                DIM_HILBERT_5_0_3,
                "general element directly linked to a rational quintic in a complete intersection of two quartics"
                    .to_string(),
            )?);
        }
        4 => {
            let m1 = model(11, 13, 5, 5, 1)?;
            out.push(quadric_family(t, &m1, residual_description(&m1, 4)?, TriState::Unknown)?);
            let m2 = model(11, 13, 5, 6, 0)?;
            out.push(quadric_family(t, &m2, residual_description(&m2, 4)?, TriState::Unknown)?);
        }
        5 => {
            let m1 = model(11, 14, 5, 5, 1)?;
            out.push(quadric_family(t, &m1, residual_description(&m1, 5)?, TriState::Unknown)?);
            let m2 = model(11, 14, 5, 6, 0)?;
            out.push(quadric_family(t, &m2, residual_description(&m2, 5)?, TriState::Unknown)?);
        }
        6 => {
            let sol = classify_cubic_classes(11, 15)?
                .into_iter()
                .next()
                .ok_or_else(|| Error::Precondition("no cubic class for (11,15)".into()))?;
            let res = cubic_residual(&sol.cls)?;
            let cls = sol.cls.clone();
            out.push(cubic_family(
                t,
                sol,
                format!("curves of class {cls} on smooth cubic surfaces, embedded into P^6 by {res}"),
                TriState::Yes,
            )?);
            let m = model(11, 15, 5, 6, 0)?;
            out.push(quadric_family(t, &m, residual_description(&m, 6)?, TriState::Yes)?);
        }
        7 => {
            let m1 = model(11, 16, 5, 5, 1)?;
            out.push(quadric_family(
                t,
                &m1,
                format!(
                    "{} (closure relation to the nodal (5,6) family unsettled)",
                    residual_description(&m1, 7)?
                ),
                TriState::Unknown,
            )?);
            let m2 = model(11, 16, 5, 6, 0)?;
            out.push(quadric_family(t, &m2, residual_description(&m2, 7)?, TriState::Unknown)?);
        }
        8 => {
            let m = model(11, 17, 5, 6, 0)?;
            out.push(quadric_family(t, &m, residual_description(&m, 8)?, TriState::Yes)?);
        }
        9 => {
            let m1 = model(11, 18, 4, 7, 0)?;
            out.push(quadric_family(t, &m1, residual_description(&m1, 9)?, TriState::Yes)?);
            let m2 = model(11, 18, 5, 6, 0)?;
            out.push(quadric_family(t, &m2, residual_description(&m2, 9)?, TriState::Yes)?);
        }
        10 => {
            let m = model(11, 19, 5, 6, 0)?;
            out.push(quadric_family(t, &m, residual_description(&m, 10)?, TriState::Yes)?);
        }
        11 => {
            let m = model(11, 20, 5, 6, 0)?;
            out.push(quadric_family(t, &m, residual_description(&m, 11)?, TriState::Yes)?);
        }
        _ => {}
    }
    Ok(out)
}

/// The full exclusion ledger behind the irreducibility of (12,12,4):
/// among the degree-10 genus-12 models only the 4-nodal (5,5) carries a
/// very ample residual; cubic-surface classes and singular cubics are
/// ruled out one test at a time.
fn analyze_12_12_4(v: &mut Verdict) -> Result<()> {
    let t = v.triple;
    let mut components = 0;
    for m in enumerate_quadric_models(10, 12)? {
        if m.base_points > 0 {
            // smooth model with a base point: ruling through the base
            // point is a multisecant of the residual embedding
            let order = secant_obstruction_base_point(m.cls)
                .ok_or_else(|| Error::Precondition("base-point model is not a curve".into()))?;
            if order >= 3 {
                v.note(format!(
                    "model {} with base point excluded: {order}-secant ruling through the base point",
                    m.cls
                ));
            } else {
                v.note(format!("model {} with base point left undecided", m.cls));
            }
            continue;
        }
        match residual_status(&m)? {
            ResidualStatus::VeryAmple => {
                components += 1;
                let desc = residual_description(&m, 4)?;
                v.components.push(quadric_family(t, &m, desc, TriState::Yes)?);
            }
            ResidualStatus::NotVeryAmple(witness) => {
                let extra = match witness {
                    Some(w) => format!("residual web contracts {w} met twice by the curve"),
                    None => "residual bidegree has a non-positive factor".to_string(),
                };
                v.note(format!("model {} delta={} excluded: {extra}", m.cls, m.delta));
            }
            ResidualStatus::Undecided => {
                v.note(format!("model {} delta={} left undecided", m.cls, m.delta));
            }
        }
    }
    // webs landing on a smooth cubic: every class has a contracted witness
    for sol in classify_cubic_classes(10, 12)? {
        let res = cubic_residual(&sol.cls)?;
        let w = contracted_multisecant(&res, &sol.cls).ok_or_else(|| {
            Error::Precondition(format!("expected a witness for {}", sol.cls))
        })?;
        v.note(format!(
            "cubic-surface class {} excluded: 2K+C contracts {w} met twice by the curve",
            sol.cls
        ));
    }
    singular_cubic_exclusions(v, 10, 12)?;
    v.irreducible = if components == 1 { TriState::Yes } else { TriState::Unknown };
    Ok(())
}

/// Genus tests ruling out smooth curves of (d, g) on singular cubic
/// surfaces, recorded as notes.
fn singular_cubic_exclusions(v: &mut Verdict, d: i64, g: i64) -> Result<()> {
    match cone_genus_test(d, g) {
        ConeGenusTag::Impossible => {
            v.note("normal cubic cone excluded: neither cone genus formula is met".to_string());
        }
        ConeGenusTag::ThroughVertex => {
            // through the vertex the curve triple-covers an elliptic curve
            let (w, fam) = triple_cover_dim_bound(g);
            let t3 = Triple::new(d, g, 3)?;
            if w + fam < lambda(t3) {
                v.note(format!(
                    "cone case passes through the vertex, but triple covers of elliptic curves fill dimension {} + {} < lambda = {}",
                    w,
                    fam,
                    lambda(t3)
                ));
            } else {
                v.note("cone case through the vertex left undecided".to_string());
            }
        }
        ConeGenusTag::OffVertex => {
            v.note("cone case off the vertex left undecided".to_string());
        }
    }
    match ruled_cubic_genus_solvable(d, g) {
        None => v.note(
            "non-normal ruled cubic excluded: the fiber-degree genus equation has no integer solution"
                .to_string(),
        ),
        Some(k) => v.note(format!("non-normal ruled cubic admits fiber degree k = {k}")),
    }
    v.note("normal cubics with double points degenerate to the smooth case (quoted)".to_string());
    Ok(())
}

fn alpha5(v: &mut Verdict, pi: i64) -> Result<()> {
    let t = v.triple;
    let (g, r) = (t.g, t.r);

    if t.d == 10 && g == 12 && r == 3 {
        v.exists = TriState::Yes;
        v.irreducible = TriState::No;
        let m = model(10, 12, 3, 7, 0)?;
        v.components.push(quadric_family(
            t,
            &m,
            "non-singular curves of bidegree (3,7) on smooth quadric surfaces".to_string(),
            TriState::Yes,
        )?);
        let sols = classify_cubic_classes(10, 12)?;
        let first = sols
            .into_iter()
            .next()
            .ok_or_else(|| Error::Precondition("no cubic class for (10,12)".into()))?;
        let classes = "(9;3,3,3,3,3,2), (10;4,4,3,3,3,3), (11;4,4,4,4,4,3)";
        v.components.push(cubic_family(
            t,
            first,
            format!("curves on smooth cubic surfaces, classes {classes} (each a line plus 3H)"),
            TriState::Yes,
        )?);
        singular_cubic_exclusions(v, 10, 12)?;
        v.cite("alpha5:two-components(10,12,3)");
        return Ok(());
    }

    if r <= 5 {
        v.exists = TriState::Unknown;
        v.irreducible = TriState::Unknown;
        v.note("the alpha = 5 classification is stated for r >= 6".to_string());
        v.cite("alpha5:classification");
        return Ok(());
    }

    // r >= 6; the Castelnuovo gate already emptied g <= r+8
    debug_assert!(g >= r + 9);
    let exists = if g == r + 9 {
        debug_assert_eq!(g, pi);
        Some(true)
    } else if g == r + 10 {
        (r >= 9).then_some(false)
    } else if g == r + 11 {
        (r >= 12).then_some(false)
    } else if g == r + 12 {
        (r >= 13).then_some(true)
    } else {
        Some(true) // g >= r + 13
    };
    match exists {
        Some(true) => {
            v.exists = TriState::Yes;
            v.irreducible = TriState::Unknown;
            if g == r + 9 {
                v.components.push(quoted_family(
                    t,
                    "extremal curves attaining the Castelnuovo genus bound".to_string(),
                    TriState::Unknown,
                ));
            }
            if g == r + 12 && r >= 13 {
                v.note("constructed from triple covers of elliptic curves (quoted)".to_string());
            }
        }
        Some(false) => {
            v.settle_empty("empty by the compounded-web analysis at alpha = 5");
        }
        None => {
            v.exists = TriState::Unknown;
            v.irreducible = TriState::Unknown;
            v.note("expected to follow from nodal curves on rational normal scrolls; unsettled".to_string());
        }
    }
    v.cite("alpha5:classification");
    Ok(())
}

/// Dimensions of the families attached to a verdict that are not known to
/// be spurious, falling back to the minimal possible dimension when no
/// model pins one.
pub fn component_dims(t: Triple) -> Result<Vec<(String, i64)>> {
    let v = verdict(t)?;
    Ok(v.components
        .iter()
        .filter(|c| c.is_component != TriState::No)
        .map(|c| (c.description.clone(), c.dim.unwrap_or_else(|| chi_min(t))))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(d: i64, g: i64, r: i64) -> Triple {
        Triple::new(d, g, r).unwrap()
    }

    #[test]
    fn low_alpha_verdicts() {
        let v = verdict(t(12, 9, 3)).unwrap(); // alpha = 0
        assert_eq!((v.exists, v.irreducible), (TriState::Yes, TriState::Yes));
        let v = verdict(t(10, 8, 3)).unwrap(); // alpha = 1
        assert_eq!((v.exists, v.irreducible), (TriState::Yes, TriState::Yes));
        let v = verdict(t(7, 5, 3)).unwrap(); // alpha = 1, g <= r boundary is empty
        assert_eq!(v.alpha, 1);
        assert_eq!(v.exists, TriState::Yes);
        let v = verdict(t(5, 3, 3)).unwrap();
        assert_eq!(v.exists, TriState::No);
        assert!(v.components.is_empty());
        assert!(verdict(t(5, 3, 2)).is_err());
    }

    #[test]
    fn alpha3_rows() {
        // r = 6: empty through g = r+4, then nonempty
        assert_eq!(verdict(t(13, 10, 6)).unwrap().exists, TriState::No);
        assert_eq!(verdict(t(14, 11, 6)).unwrap().exists, TriState::Yes);
        // g = r+6 empties for r >= 10
        assert_eq!(verdict(t(23, 16, 10)).unwrap().exists, TriState::No);
        assert_eq!(verdict(t(21, 15, 9)).unwrap().exists, TriState::Yes);
        // irreducible from 2r+3 on
        let v = verdict(t(18, 15, 6)).unwrap();
        assert_eq!(v.irreducible, TriState::Yes);
        // low r stays open
        assert_eq!(verdict(t(9, 9, 3)).unwrap().exists, TriState::Unknown);
    }

    #[test]
    fn alpha4_key_triples() {
        let v = verdict(t(8, 9, 3)).unwrap();
        assert_eq!((v.exists, v.irreducible), (TriState::Yes, TriState::Yes));
        assert_eq!(v.components[0].dim, Some(33));

        let v = verdict(t(9, 10, 3)).unwrap();
        assert_eq!((v.exists, v.irreducible), (TriState::Yes, TriState::No));
        let dims: Vec<i64> = v.components.iter().map(|c| c.dim.unwrap()).collect();
        assert_eq!(dims, vec![36, 36]);

        let v = verdict(t(10, 11, 3)).unwrap();
        assert_eq!((v.exists, v.irreducible), (TriState::Yes, TriState::Yes));
        assert_eq!(v.components[0].dim, Some(40));
        assert_eq!(v.components[1].dim, Some(39));
        assert_eq!(v.components[1].is_component, TriState::No);

        let v = verdict(t(12, 12, 4)).unwrap();
        assert_eq!((v.exists, v.irreducible), (TriState::Yes, TriState::Yes));
        assert_eq!(v.components.len(), 1);
        assert_eq!(v.components[0].dim, Some(49));

        let v = verdict(t(18, 15, 7)).unwrap();
        assert_eq!((v.exists, v.irreducible), (TriState::Yes, TriState::No));
        assert_eq!(v.components.len(), 2);

        let v = verdict(t(22, 17, 9)).unwrap();
        assert_eq!(v.exists, TriState::No);

        let v = verdict(t(10, 12, 3)).unwrap();
        assert_eq!((v.exists, v.irreducible), (TriState::Yes, TriState::No));
        let dims: Vec<i64> = v.components.iter().map(|c| c.dim.unwrap()).collect();
        assert_eq!(dims, vec![40, 40]);
    }

    #[test]
    fn component_dim_examples() {
        assert_eq!(component_dims(t(8, 9, 3)).unwrap()[0].1, 33);
        let dims: Vec<i64> = component_dims(t(9, 10, 3)).unwrap().iter().map(|x| x.1).collect();
        assert_eq!(dims, vec![36, 36]);
        let dims: Vec<i64> = component_dims(t(10, 11, 3)).unwrap().iter().map(|x| x.1).collect();
        assert_eq!(dims, vec![40]);
    }

    #[test]
    fn known_components_respect_the_lower_bound() {
        for (d, g, r) in [
            (8, 9, 3),
            (9, 10, 3),
            (10, 11, 3),
            (11, 12, 3),
            (10, 12, 3),
            (12, 12, 4),
            (14, 13, 5),
            (16, 14, 6),
            (18, 15, 7),
            (20, 16, 8),
            (21, 17, 8),
            (23, 18, 9),
            (25, 19, 10),
            (27, 20, 11),
        ] {
            let v = verdict(t(d, g, r)).unwrap();
            for c in &v.components {
                if c.is_component == TriState::Yes {
                    if let Some(dim) = c.dim {
                        assert!(
                            dim >= c.dim_expected,
                            "({d},{g},{r}): {} has dim {dim} < expected {}",
                            c.description,
                            c.dim_expected
                        );
                    }
                }
            }
            assert!(!v.citations.is_empty());
        }
    }

    #[test]
    fn pipeline_matches_case_table_for_alpha4() {
        for r in 5..=20 {
            for g in 0..=60i64 {
                let d = g + r - 4;
                if d < 1 {
                    continue;
                }
                let pipeline = alpha4_pipeline_exists(g, r).unwrap();
                assert_ne!(pipeline, TriState::Unknown, "pipeline stuck at ({g},{r})");
                let table = verdict(t(d, g, r)).unwrap().exists;
                assert_eq!(pipeline, table, "disagreement at (d,g,r) = ({d},{g},{r})");
            }
        }
    }

    #[test]
    fn castelnuovo_never_contradicted() {
        for r in 3..=20 {
            for g in 0..=60i64 {
                for alpha in 0..=5 {
                    let d = g + r - alpha;
                    if d < 1 {
                        continue;
                    }
                    let v = verdict(t(d, g, r)).unwrap();
                    let over_bound = d < r || g > castelnuovo_pi(d, r).unwrap_or(i64::MAX);
                    if over_bound {
                        assert_eq!(v.exists, TriState::No, "({d},{g},{r})");
                    }
                }
            }
        }
    }

    #[test]
    fn r8_component_counts() {
        // one component except r = 7 (two strata survive)
        for (r, want) in [(5, 1), (6, 1), (7, 2), (8, 1)] {
            let v = verdict(t(2 * r + 4, r + 8, r)).unwrap();
            let n = v
                .components
                .iter()
                .filter(|c| c.is_component == TriState::Yes)
                .count();
            assert_eq!(n, want, "r = {r}");
        }
    }

    #[test]
    fn exclusion_notes_for_12_12_4() {
        let v = verdict(t(12, 12, 4)).unwrap();
        let joined = v.notes.join("\n");
        assert!(joined.contains("(4,6)"), "{joined}");
        assert!(joined.contains("(3,7)"), "{joined}");
        assert!(joined.contains("4-secant"), "{joined}");
        assert!(joined.contains("no integer solution"), "{joined}");
        assert!(joined.contains("triple covers"), "{joined}");
    }
}
