//! Linkage arithmetic for space curves in a complete intersection of two
//! surfaces, quartics-through counts, and the Grassmannian fiber
//! accounting that pins component dimensions.

use serde::Serialize;

use crate::error::{Error, Result};

/// One direct linkage: (d,g) and (e,h) residual to each other in a
/// complete intersection of surfaces of degrees s and t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LiaisonStep {
    pub d: i64,
    pub g: i64,
    pub s: i64,
    pub t: i64,
    pub e: i64,
    pub h: i64,
}

impl LiaisonStep {
    pub fn new(d: i64, g: i64, s: i64, t: i64) -> Result<Self> {
        let (e, h) = linked_genus(d, g, s, t)?;
        let step = LiaisonStep { d, g, s, t, e, h };
        // the defining relation holds by construction
        debug_assert_eq!(2 * (step.g - step.h), (s + t - 4) * (step.d - step.e));
        debug_assert_eq!(step.d + step.e, s * t);
        Ok(step)
    }
}

/// Degree and genus of the residual curve: e = st - d and
/// 2(g - h) = (s + t - 4)(d - e). Fails when the genus equation has no
/// integer solution.
pub fn linked_genus(d: i64, g: i64, s: i64, t: i64) -> Result<(i64, i64)> {
    if s < 2 || t < 2 {
        return Err(Error::Precondition(format!(
            "linking surfaces need degree >= 2, got ({s},{t})"
        )));
    }
    if s * t <= d {
        return Err(Error::Precondition(format!(
            "curve of degree {d} does not fit in a ({s},{t}) complete intersection"
        )));
    }
    let e = s * t - d;
    let twice_drop = (s + t - 4) * (d - e);
    if twice_drop % 2 != 0 {
        return Err(Error::NoIntegralLinkage(format!(
            "(s+t-4)(d-e) = {twice_drop} is odd for (d,g,s,t) = ({d},{g},{s},{t})"
        )));
    }
    Ok((e, g - twice_drop / 2))
}

/// Number of independent degree-m surfaces through a curve whose m-th
/// twist is nonspecial: binom(m+3,3) - (md - g + 1). Refuses when the
/// nonspeciality precondition md > 2g - 2 fails (the count would only be
/// a lower bound).
pub fn surfaces_through(d: i64, g: i64, m: i64) -> Result<i64> {
    if m * d <= 2 * g - 2 {
        return Err(Error::Precondition(format!(
            "twist m={m} may be special on (d,g) = ({d},{g}): need md > 2g - 2"
        )));
    }
    let binom = (m + 1) * (m + 2) * (m + 3) / 6;
    Ok(binom - (m * d - g + 1))
}

/// Dimension (k+1)(n-k) of the Grassmannian of k-planes in P^n. k = n is
/// allowed and gives 0 (a point).
pub fn grassmann_dim(k: i64, n: i64) -> Result<i64> {
    if k < 0 || k > n {
        return Err(Error::Precondition(format!("G({k},{n}) needs 0 <= k <= n")));
    }
    Ok((k + 1) * (n - k))
}

/// Dimension ledger for the pencil-of-quartics correspondence between a
/// curve family and the Hilbert scheme of its residuals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinkageAccount {
    pub e: i64,
    pub h: i64,
    pub quartics_through_source: i64,
    pub quartics_through_residual: i64,
    /// Dimension of the incidence locus of linking pencils.
    pub sigma_dim: i64,
    /// Fiber dimension over the residual Hilbert scheme.
    pub fiber_down: i64,
    /// Fiber dimension over the source family.
    pub fiber_up: i64,
    pub component_dim: i64,
}

/// Runs the full account: fibers are pencils of quartics inside the webs
/// cut out by the quartics through each curve.
pub fn linkage_dimension_account(
    d: i64,
    g: i64,
    s: i64,
    t: i64,
    dim_residual_hilbert: i64,
) -> Result<LinkageAccount> {
    let (e, h) = linked_genus(d, g, s, t)?;
    let q_res = surfaces_through(e, h, 4)?;
    let q_src = surfaces_through(d, g, 4)?;
    let fiber_down = grassmann_dim(1, q_res - 1)?;
    let fiber_up = grassmann_dim(1, q_src - 1)?;
    let sigma_dim = fiber_down + dim_residual_hilbert;
    Ok(LinkageAccount {
        e,
        h,
        quartics_through_source: q_src,
        quartics_through_residual: q_res,
        sigma_dim,
        fiber_down,
        fiber_up,
        component_dim: sigma_dim - fiber_up,
    })
}
