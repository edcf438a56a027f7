//! Divisor-class lattices on the two rational surfaces everything here
//! lives on: the smooth quadric P1 x P1 and the blow-up S_n of the plane
//! at n <= 8 general points.
//!
//! Blow-up classes are written `(a; b1,...,bn)` for a*l - sum b_i e_i with
//! l^2 = 1, e_i^2 = -1, l.e_i = 0; the canonical class is (-3; -1,...,-1).
//! Quadric classes `(a,b)` use the Segre pairing (a,b).(c,d) = ad + bc.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_BLOWUP_POINTS: usize = 8;

/// Bidegree (a,b) on the smooth quadric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadricClass {
    pub a: i64,
    pub b: i64,
}

impl QuadricClass {
    pub fn new(a: i64, b: i64) -> Self {
        QuadricClass { a, b }
    }

    /// Effective divisor classes are exactly the non-negative bidegrees.
    pub fn is_effective(&self) -> bool {
        self.a >= 0 && self.b >= 0
    }
}

/// Class a*l - sum b_i e_i on the blow-up of the plane at n points,
/// 1 <= n <= 8. The stored `b` are the subtracted multiplicities, so the
/// exceptional class e_1 itself reads (0; -1, 0, ..., 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlowupClass {
    a: i64,
    b: Vec<i64>,
}

impl BlowupClass {
    pub fn new(a: i64, b: Vec<i64>) -> Result<Self> {
        if b.is_empty() || b.len() > MAX_BLOWUP_POINTS {
            return Err(Error::InvalidClass(format!(
                "blow-up lattice needs 1..=8 exceptional classes, got {}",
                b.len()
            )));
        }
        Ok(BlowupClass { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    /// Canonical class K = (-3; -1,...,-1) on S_n.
    pub fn canonical(n: usize) -> Result<Self> {
        BlowupClass::new(-3, vec![-1; n])
    }

    /// The i-th exceptional class e_i (zero-based index).
    pub fn exceptional(n: usize, i: usize) -> Result<Self> {
        let mut b = vec![0; n];
        b[i] = -1;
        BlowupClass::new(0, b)
    }

    /// Intersection pairing; both classes must live on the same S_n.
    /// Rank agreement is the caller's contract here, the checked entry
    /// point is [`intersect_blowup`].
    pub fn dot(&self, other: &BlowupClass) -> i64 {
        assert_eq!(self.n(), other.n(), "intersection across different lattices");
        self.a * other.a - self.b.iter().zip(&other.b).map(|(x, y)| x * y).sum::<i64>()
    }

    pub fn self_intersection(&self) -> i64 {
        self.dot(self)
    }

    pub fn dot_canonical(&self) -> i64 {
        -3 * self.a + self.b.iter().sum::<i64>()
    }

    /// Same class on S_{n+1}, padded with a trailing 0 coefficient.
    pub fn padded(&self) -> Result<Self> {
        let mut b = self.b.clone();
        b.push(0);
        BlowupClass::new(self.a, b)
    }
}

impl std::ops::Add<&BlowupClass> for &BlowupClass {
    type Output = BlowupClass;
    fn add(self, rhs: &BlowupClass) -> BlowupClass {
        assert_eq!(self.n(), rhs.n(), "sum across different lattices");
        BlowupClass {
            a: self.a + rhs.a,
            b: self.b.iter().zip(&rhs.b).map(|(x, y)| x + y).collect(),
        }
    }
}

impl std::ops::Sub<&BlowupClass> for &BlowupClass {
    type Output = BlowupClass;
    fn sub(self, rhs: &BlowupClass) -> BlowupClass {
        assert_eq!(self.n(), rhs.n(), "difference across different lattices");
        BlowupClass {
            a: self.a - rhs.a,
            b: self.b.iter().zip(&rhs.b).map(|(x, y)| x - y).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// text grammar
//
// quadric:  "(a,b)"
// blow-up:  "(a;b1,b2,...,bn)", exponent shorthand "3^2" accepted on input,
//           always expanded on output. Whitespace is ignored.
// ---------------------------------------------------------------------------

impl fmt::Display for QuadricClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl fmt::Display for BlowupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.b.iter().map(|c| c.to_string()).collect();
        write!(f, "({};{})", self.a, coeffs.join(","))
    }
}

fn strip_parens(s: &str) -> Result<String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('(')
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected parenthesized class, got {s:?}")))?;
    Ok(inner.to_string())
}

fn parse_int(s: &str) -> Result<i64> {
    s.parse::<i64>()
        .map_err(|_| Error::Parse(format!("expected integer, got {s:?}")))
}

impl FromStr for QuadricClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = strip_parens(s)?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 2 || inner.contains(';') {
            return Err(Error::Parse(format!("expected \"(a,b)\", got {s:?}")));
        }
        Ok(QuadricClass::new(parse_int(parts[0])?, parse_int(parts[1])?))
    }
}

impl FromStr for BlowupClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = strip_parens(s)?;
        let (head, tail) = inner
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected \"(a;b1,...)\", got {s:?}")))?;
        let a = parse_int(head)?;
        let mut b = Vec::new();
        for item in tail.split(',') {
            if item.is_empty() {
                return Err(Error::Parse(format!("empty coefficient in {s:?}")));
            }
            let (base, count) = match item.split_once('^') {
                Some((v, k)) => {
                    let k = parse_int(k)?;
                    if k < 1 || k > MAX_BLOWUP_POINTS as i64 {
                        return Err(Error::Parse(format!("bad exponent in {item:?}")));
                    }
                    (parse_int(v)?, k as usize)
                }
                None => (parse_int(item)?, 1),
            };
            b.extend(std::iter::repeat(base).take(count));
        }
        BlowupClass::new(a, b)
    }
}

// Classes serialize as their canonical (expanded) text form.
impl Serialize for QuadricClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Serialize for BlowupClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

// ---------------------------------------------------------------------------
// lattice operations
// ---------------------------------------------------------------------------

/// Segre pairing on the quadric: (a,b).(c,d) = ad + bc.
pub fn intersect_quadric(x: QuadricClass, y: QuadricClass) -> i64 {
    x.a * y.b + x.b * y.a
}

/// Arithmetic genus of a curve of bidegree (a,b): (a-1)(b-1).
/// Rejects non-curve classes (a factor <= 0).
pub fn pa_quadric(x: QuadricClass) -> Result<i64> {
    if x.a < 1 || x.b < 1 {
        return Err(Error::InvalidClass(format!(
            "genus of {x} undefined: both bidegrees must be >= 1"
        )));
    }
    Ok((x.a - 1) * (x.b - 1))
}

/// Checked intersection product on S_n.
pub fn intersect_blowup(x: &BlowupClass, y: &BlowupClass) -> Result<i64> {
    if x.n() != y.n() {
        return Err(Error::LatticeMismatch(x.n(), y.n()));
    }
    Ok(x.dot(y))
}

/// Arithmetic genus by adjunction: 1 + (x^2 + x.K)/2.
///
/// The sum x^2 + x.K is even for every integral class (a(a-3) and each
/// b_i(b_i - 1) are products of consecutive-parity integers); a failure
/// here means the lattice data is corrupt, so it aborts.
pub fn pa_blowup(x: &BlowupClass) -> i64 {
    let s = x.self_intersection() + x.dot_canonical();
    assert!(s % 2 == 0, "odd adjunction sum for {x}: lattice corruption");
    1 + s / 2
}

/// Projective dimension of the complete system |(a,b)| on the quadric:
/// (a+1)(b+1) - 1.
pub fn dim_linear_system_quadric(x: QuadricClass) -> Result<i64> {
    if x.a < 0 || x.b < 0 {
        return Err(Error::InvalidClass(format!("|{x}| is empty")));
    }
    Ok((x.a + 1) * (x.b + 1) - 1)
}

// (-1)-curve enumeration. The search box a in [0,6], b_i in [-1,3] is
// validated against a wider sweep in the tests before being relied on.
const NEG_A_MAX: i64 = 6;
const NEG_B_MIN: i64 = -1;
const NEG_B_MAX: i64 = 3;

/// Fill coefficient slots so that the remaining sum and square-sum hit
/// zero exactly; branches that cannot reach the target are cut.
fn fill_coeffs(
    rem_sum: i64,
    rem_sq: i64,
    slots: usize,
    b_min: i64,
    b_max: i64,
    cur: &mut Vec<i64>,
    sink: &mut dyn FnMut(&[i64]),
) {
    if slots == 0 {
        if rem_sum == 0 && rem_sq == 0 {
            sink(cur);
        }
        return;
    }
    let left = (slots - 1) as i64;
    for v in b_min..=b_max {
        let s = rem_sum - v;
        let q = rem_sq - v * v;
        if q < 0 || s < left * b_min || s > left * b_max {
            continue;
        }
        cur.push(v);
        fill_coeffs(s, q, slots - 1, b_min, b_max, cur, sink);
        cur.pop();
    }
}

fn enumerate_neg_curves(n: usize, a_max: i64, b_min: i64, b_max: i64) -> Vec<BlowupClass> {
    let mut found = Vec::new();
    for a in 0..=a_max {
        // E^2 = -1 and E.K = -1 pin both symmetric functions of the b_i
        let target_sum = 3 * a - 1;
        let target_sq = a * a + 1;
        let mut cur = Vec::with_capacity(n);
        fill_coeffs(target_sum, target_sq, n, b_min, b_max, &mut cur, &mut |b| {
            found.push(BlowupClass { a, b: b.to_vec() });
        });
    }
    found.sort();
    found
}

static NEG_CURVES: [OnceLock<Vec<BlowupClass>>; MAX_BLOWUP_POINTS] = [
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
];

/// All classes E on S_n with E^2 = E.K = -1 (the "lines" of the Del Pezzo
/// surface), sorted lexicographically. Computed once per n and cached.
pub fn neg_curves(n: usize) -> Result<&'static [BlowupClass]> {
    if n == 0 || n > MAX_BLOWUP_POINTS {
        return Err(Error::Precondition(format!(
            "(-1)-curves defined for n in 1..=8, got {n}"
        )));
    }
    Ok(NEG_CURVES[n - 1].get_or_init(|| enumerate_neg_curves(n, NEG_A_MAX, NEG_B_MIN, NEG_B_MAX)))
}

/// Line criterion for very ampleness on S_n: x.E >= 1 for every (-1)-curve.
///
/// For n <= 6 this matches the classical characterization. For n in {7,8}
/// it is only the line part of the test and may over-approve (the
/// anticanonical class of S_8 meets every line once but embeds nothing);
/// callers in that range carry a criterion-only flag.
pub fn is_very_ample(x: &BlowupClass) -> bool {
    neg_curves(x.n())
        .expect("n validated by BlowupClass construction")
        .iter()
        .all(|e| x.dot(e) >= 1)
}

/// True when the line criterion may be inconclusive for this lattice rank.
pub fn criterion_only(n: usize) -> bool {
    n >= 7
}

/// First (-1)-curve contracted by `residual` that `curve` meets at least
/// twice. A witness certifies that the restriction of `residual` to the
/// curve identifies two points, i.e. is not very ample there.
pub fn contracted_multisecant(
    residual: &BlowupClass,
    curve: &BlowupClass,
) -> Option<BlowupClass> {
    assert_eq!(residual.n(), curve.n(), "witness search across different lattices");
    neg_curves(residual.n())
        .expect("n validated by BlowupClass construction")
        .iter()
        .find(|e| residual.dot(e) == 0 && curve.dot(e) >= 2)
        .cloned()
}

/// Sections of O(x) on S_n via Riemann-Roch, 1 + (x^2 - x.K)/2, valid when
/// the twist E' = (a+3)l - sum (b_i+1)e_i is positive on l and on every
/// (-1)-curve (that positivity is what kills h^1 and h^2). Refuses instead
/// of returning a lower bound when the check fails.
pub fn expected_h0_blowup(x: &BlowupClass) -> Result<i64> {
    let twist = BlowupClass::new(x.a + 3, x.b.iter().map(|c| c + 1).collect())?;
    if twist.a < 1 {
        return Err(Error::VanishingNotJustified(format!(
            "twist of {x} not positive on the line class"
        )));
    }
    if let Some(bad) = neg_curves(x.n())?.iter().find(|e| twist.dot(e) < 1) {
        return Err(Error::VanishingNotJustified(format!(
            "twist of {x} not positive on the (-1)-curve {bad}"
        )));
    }
    let s = x.self_intersection() - x.dot_canonical();
    assert!(s % 2 == 0, "odd Riemann-Roch sum for {x}");
    Ok(1 + s / 2)
}
