//! Finite-box evidence for `L·D >= 2` over irreducible curves `D` on a ruled
//! surface blown up at one point.
//!
//! Candidates are the exceptional curve `E`, fibers through or away from the
//! blown-up point, and strict transforms `a·section + bΓ - βE` that pass the
//! numerical irreducibility tests for their surface kind. The search is a
//! finite box and proves nothing outside it; reports always carry the box.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::families::ExampleData;
use super::lattice::{canonical, intersect, DivisorClass, SurfaceKind, SurfaceModel};
use crate::error::{Error, Result};
use crate::rational::isqrt_i128;

/// How many tied witnesses a report keeps.
const MAX_TIES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBox {
    /// `|b| <= coeff`, `1 <= a <= coeff`, every `0 <= β <= beta`.
    pub coeff: i64,
    pub beta: i64,
    /// Second pass over `|a|, |b| <= extended`, with `β` at the endpoints
    /// `0` and the largest value adjunction allows.
    pub extended: i64,
}

impl Default for SearchBox {
    fn default() -> Self {
        SearchBox {
            coeff: 60,
            beta: 60,
            extended: 600,
        }
    }
}

impl SearchBox {
    pub fn describe(&self) -> String {
        format!(
            "1 <= a <= {c}, |b| <= {c}, 0 <= beta <= {bt}; extended 1 <= a <= {e}, |b| <= {e} at extremal beta",
            c = self.coeff,
            bt = self.beta,
            e = self.extended
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmplenessReport {
    pub min: i64,
    /// Lexicographically smallest class attaining `min`.
    pub witness: DivisorClass,
    /// Up to eight classes attaining `min`, sorted.
    pub ties: Vec<DivisorClass>,
    pub min_brute: i64,
    pub min_extended: i64,
    /// Classes examined in the first pass.
    pub candidates: u64,
    #[serde(rename = "box")]
    pub search_box: SearchBox,
    pub box_text: String,
}

/// `R̃ - K̃`, the class whose ampleness the constructions rely on.
pub fn claim_line_bundle(ex: &ExampleData) -> DivisorClass {
    &ex.branch_tilde - &canonical(&ex.surface)
}

/// Upper end of the adjunction-type inequality `β(β-1) <= cap`, or `None`
/// when no `β` (not even 0) is allowed. Zero also stands for "forced zero".
fn beta_cap(kind: SurfaceKind, a: i64, b: i64) -> Option<i128> {
    let (a, b) = (a as i128, b as i128);
    match kind {
        SurfaceKind::SplitTorsion { m } => {
            if b < 0 {
                return None;
            }
            // Multisections with no fiber part are unions of torsion
            // translates unless their degree reaches the torsion order.
            if b == 0 && a >= 2 && a < m as i128 {
                return None;
            }
            // C_0 and C_∞ avoid the blown-up point.
            if a == 1 && b == 0 {
                return Some(0);
            }
            Some(2 * (a - 1) * b)
        }
        SurfaceKind::IndecDeg1 => {
            let h = a + 2 * b;
            if h < 0 {
                return None;
            }
            // Multiples of -K avoid the point.
            if h == 0 {
                return Some(0);
            }
            Some(h * (a - 1))
        }
    }
}

/// Largest `β >= 0` with `β(β-1) <= cap`.
fn beta_max(cap: i128) -> i128 {
    debug_assert!(cap >= 0);
    (isqrt_i128(4 * cap + 1) + 1) / 2
}

fn allowed(kind: SurfaceKind, a: i64, b: i64, beta: i64) -> bool {
    match beta_cap(kind, a, b) {
        None => false,
        Some(_) if forced_zero(kind, a, b) => beta == 0,
        Some(cap) => (beta as i128) * (beta as i128 - 1) <= cap,
    }
}

fn forced_zero(kind: SurfaceKind, a: i64, b: i64) -> bool {
    match kind {
        SurfaceKind::SplitTorsion { .. } => a == 1 && b == 0,
        SurfaceKind::IndecDeg1 => a + 2 * b == 0,
    }
}

/// Running minimum with the smallest few witnesses.
#[derive(Clone, Debug)]
struct Best {
    value: i64,
    ties: Vec<DivisorClass>,
    count: u64,
}

impl Best {
    fn empty() -> Self {
        Best {
            value: i64::MAX,
            ties: Vec::new(),
            count: 0,
        }
    }

    fn offer(&mut self, value: i64, make: impl FnOnce() -> DivisorClass) {
        self.count += 1;
        if value < self.value {
            self.value = value;
            self.ties.clear();
        }
        if value == self.value {
            let d = make();
            if let Err(pos) = self.ties.binary_search(&d) {
                self.ties.insert(pos, d);
                self.ties.truncate(MAX_TIES);
            }
        }
    }

    fn merge(mut self, other: Best) -> Best {
        self.count += other.count;
        if other.value < self.value {
            self.value = other.value;
            self.ties = other.ties;
        } else if other.value == self.value {
            self.ties.extend(other.ties);
            self.ties.sort();
            self.ties.dedup();
            self.ties.truncate(MAX_TIES);
        }
        self
    }
}

/// Minimum of `L·D` over the candidate curves in the box.
pub fn min_l_dot_d(s: &SurfaceModel, l: &DivisorClass, bx: &SearchBox) -> Result<AmplenessReport> {
    if s.blowups > 1 {
        return Err(Error::Domain("candidate curves are modelled for at most one blow-up".into()));
    }
    if bx.coeff < 1 || bx.beta < 0 || bx.extended < 0 {
        return Err(Error::EmptyRange(format!("search box {bx:?}")));
    }
    // Touch the pairing once so a mismatched L is reported as such.
    intersect(l, &DivisorClass::fiber().pullback(s.blowups), s)?;

    let t = s.blowups;
    let sq = s.section_square() as i128;
    let (la, lb) = (l.a as i128, l.b as i128);
    let lbeta = l.exc.first().copied().unwrap_or(0) as i128;
    // L·(a·section + bΓ - βE) = la a sq + la b + a lb - lbeta β.
    let dot = |a: i64, b: i64, beta: i64| -> i64 {
        let (a, b, beta) = (a as i128, b as i128, beta as i128);
        (la * a * sq + la * b + a * lb - lbeta * beta) as i64
    };
    let class = |a: i64, b: i64, beta: i64| DivisorClass::new(a, b, if t == 1 { vec![beta] } else { vec![] });
    let kind = s.kind;
    let max_beta = if t == 1 { bx.beta } else { 0 };

    let mut special = Best::empty();
    special.offer(dot(0, 1, 0), || class(0, 1, 0));
    if t == 1 {
        special.offer(dot(0, 0, -1), || class(0, 0, -1));
        special.offer(dot(0, 1, 1), || class(0, 1, 1));
    }

    let brute = (1..=bx.coeff)
        .into_par_iter()
        .map(|a| {
            let mut best = Best::empty();
            for b in -bx.coeff..=bx.coeff {
                for beta in 0..=max_beta {
                    if allowed(kind, a, b, beta) {
                        best.offer(dot(a, b, beta), || class(a, b, beta));
                    }
                }
            }
            best
        })
        .reduce(Best::empty, Best::merge);
    let candidates = brute.count + special.count;

    let extended = (1..=bx.extended)
        .into_par_iter()
        .map(|a| {
            let mut best = Best::empty();
            for b in -bx.extended..=bx.extended {
                let Some(cap) = beta_cap(kind, a, b) else { continue };
                let top = if t == 1 && !forced_zero(kind, a, b) {
                    beta_max(cap) as i64
                } else {
                    0
                };
                best.offer(dot(a, b, 0), || class(a, b, 0));
                if top > 0 {
                    best.offer(dot(a, b, top), || class(a, b, top));
                }
            }
            best
        })
        .reduce(Best::empty, Best::merge);

    let (min_brute, min_extended) = (brute.value, extended.value);
    let all = special.merge(brute).merge(extended);
    let witness = all
        .ties
        .first()
        .cloned()
        .ok_or_else(|| Error::EmptyRange("no candidate curves in the box".into()))?;
    Ok(AmplenessReport {
        min: all.value,
        witness,
        ties: all.ties,
        min_brute,
        min_extended,
        candidates,
        search_box: *bx,
        box_text: bx.describe(),
    })
}

#[cfg(test)]
mod tests {
    use super::super::families::{build_example, Family};
    use super::*;

    #[test]
    fn beta_max_matches_brute_force() {
        for cap in 0..5000i128 {
            let brute = (0..200i128).filter(|b| b * (b - 1) <= cap).max().unwrap();
            assert_eq!(beta_max(cap), brute, "cap {cap}");
        }
    }

    #[test]
    fn fast_dot_matches_pairing() {
        let ex = build_example(Family::Ex52 { k: 3 }).unwrap();
        let l = claim_line_bundle(&ex);
        let r = min_l_dot_d(&ex.surface, &l, &SearchBox { coeff: 8, beta: 8, extended: 20 }).unwrap();
        for d in &r.ties {
            assert_eq!(intersect(&l, d, &ex.surface).unwrap(), r.min);
        }
    }

    #[test]
    fn claim_line_bundle_ex51() {
        let ex = build_example(Family::Ex51 { k: 3, m: 5 }).unwrap();
        let l = claim_line_bundle(&ex);
        assert_eq!(l, DivisorClass::new(18, 2, vec![7]));
        assert_eq!(intersect(&l, &l, &ex.surface).unwrap(), 4 * 3 + 11);
    }

    #[test]
    fn claim_51_small_box() {
        let ex = build_example(Family::Ex51 { k: 3, m: 5 }).unwrap();
        let l = claim_line_bundle(&ex);
        let r = min_l_dot_d(&ex.surface, &l, &SearchBox { coeff: 20, beta: 20, extended: 100 }).unwrap();
        assert_eq!(r.min, 2);
        assert_eq!(r.witness, DivisorClass::new(1, 0, vec![0]));
    }

    #[test]
    fn claim_52_small_box() {
        let ex = build_example(Family::Ex52 { k: 1 }).unwrap();
        let l = claim_line_bundle(&ex);
        let r = min_l_dot_d(&ex.surface, &l, &SearchBox { coeff: 20, beta: 20, extended: 100 }).unwrap();
        assert_eq!(r.min, 2);
        assert_eq!(r.witness, DivisorClass::new(2, -1, vec![0]));
    }

    #[test]
    fn fiber_class_is_degenerate() {
        let s = SurfaceModel::indec_deg1().blown_up(1);
        let l = DivisorClass::fiber().pullback(1);
        let r = min_l_dot_d(&s, &l, &SearchBox { coeff: 10, beta: 10, extended: 30 }).unwrap();
        assert_eq!(r.min, 0);
        assert!(r.ties.contains(&l));
    }

    #[test]
    fn irreducibility_rules() {
        let split = SurfaceKind::SplitTorsion { m: 5 };
        assert!(allowed(split, 1, 0, 0));
        assert!(!allowed(split, 1, 0, 1));
        assert!(!allowed(split, 3, 0, 0));
        assert!(allowed(split, 5, 0, 1));
        assert!(!allowed(split, 5, 0, 2));
        assert!(!allowed(split, 2, -1, 0));
        let indec = SurfaceKind::IndecDeg1;
        assert!(allowed(indec, 2, -1, 0));
        assert!(!allowed(indec, 2, -1, 1));
        assert!(!allowed(indec, 1, -1, 0));
        assert!(allowed(indec, 1, 0, 1));
        assert!(!allowed(indec, 1, 0, 2));
    }

    #[test]
    fn rejects_mismatched_class() {
        let s = SurfaceModel::indec_deg1().blown_up(1);
        let err = min_l_dot_d(&s, &DivisorClass::base(3, 1), &SearchBox::default()).unwrap_err();
        assert_eq!(err.kind(), "surface_mismatch");
    }
}
