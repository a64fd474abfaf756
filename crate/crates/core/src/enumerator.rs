//! Exhaustive search for singularity-index vectors with prescribed `chi_f`.
//!
//! For a fixed genus the index-only `chi` formula clears to
//!
//! ```text
//! 4(2g+1) chi = g s_2 + sum_{j>=3} c_j s_j,    c_j > 0,
//! ```
//!
//! and `g * (K^2 - 4(g-1)/g chi) = sum_{j>=3} x_j s_j` with `x_j > 0`, which
//! the slope cap bounds from above. Each `s_j` (`j >= 3`) therefore lives in a
//! finite box; `s_2` is solved from the first equation rather than scanned.
//! With `s_2 >= 0` the `chi` equation gives a second box. Both are intersected.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::error::{Error, Result};
use crate::invariants::{self, FibrationNumerics, SingularityIndices};
use crate::rational::{self, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum S2Mode {
    NonNegative,
    Negative,
    Any,
}

impl S2Mode {
    fn admits(self, s2: i64) -> bool {
        match self {
            S2Mode::NonNegative => s2 >= 0,
            S2Mode::Negative => s2 < 0,
            S2Mode::Any => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SlopeCap {
    /// Elliptic base: `min(9, hyperelliptic cap)`.
    MiyaokaYau9,
    /// Base genus `>= 2`: the hyperelliptic cap alone.
    HyperellipticCap,
    Custom(#[serde(with = "rational::rational_str")] Rational),
}

impl SlopeCap {
    pub fn value(&self, g: u32) -> Result<Rational> {
        match self {
            SlopeCap::MiyaokaYau9 => bounds::slope_upper(g, 1),
            SlopeCap::HyperellipticCap => bounds::hyperelliptic_slope_cap(g),
            SlopeCap::Custom(r) => Ok(r.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    #[serde(with = "rational::rational_str")]
    pub chi: Rational,
    pub b: u32,
    pub g_min: u32,
    pub g_max: u32,
    pub s2_mode: S2Mode,
    pub slope_cap: SlopeCap,
    pub require_n_parity: bool,
    #[serde(default)]
    pub ksq_range: Option<(i64, i64)>,
}

/// Upper end of the default genus range at `chi = 1`. Anything above 17 is
/// already excluded by the quadratic bound.
pub const DEFAULT_G_MAX: u32 = 60;

impl SearchSpec {
    pub fn new(chi: Rational, b: u32) -> Self {
        SearchSpec {
            chi,
            b,
            g_min: 2,
            g_max: DEFAULT_G_MAX,
            s2_mode: S2Mode::NonNegative,
            slope_cap: if b == 1 {
                SlopeCap::MiyaokaYau9
            } else {
                SlopeCap::HyperellipticCap
            },
            require_n_parity: true,
            ksq_range: None,
        }
    }

    pub fn genus_range(mut self, lo: u32, hi: u32) -> Self {
        self.g_min = lo;
        self.g_max = hi;
        self
    }

    pub fn mode(mut self, mode: S2Mode) -> Self {
        self.s2_mode = mode;
        self
    }

    pub fn parity(mut self, require: bool) -> Self {
        self.require_n_parity = require;
        self
    }

    pub fn ksq_between(mut self, lo: i64, hi: i64) -> Self {
        self.ksq_range = Some((lo, hi));
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.chi.is_positive() {
            return Err(Error::Domain("chi must be positive".into()));
        }
        if self.b < 1 {
            return Err(Error::Domain("search needs base genus >= 1".into()));
        }
        if self.g_min < 2 {
            return Err(Error::Domain(format!("genus range starts at {} < 2", self.g_min)));
        }
        if self.g_min > self.g_max {
            return Err(Error::EmptyRange(format!("g in {}..={}", self.g_min, self.g_max)));
        }
        if let Some((lo, hi)) = self.ksq_range {
            if lo > hi {
                return Err(Error::EmptyRange(format!("K^2 in {lo}..={hi}")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibleCase {
    pub g: u32,
    pub ksq: i64,
    pub n: i64,
    pub indices: SingularityIndices,
    pub numerics: FibrationNumerics,
}

impl FeasibleCase {
    fn sort_key(&self) -> (u32, i64, &[i64]) {
        (self.g, self.ksq, self.indices.dense())
    }
}

/// Constraint families applied by [`enumerate`], by name.
pub const CHI_EQUATION: &str = "chi-equation";
pub const N_INTEGRAL: &str = "n-positive-integer";
pub const N_PARITY: &str = "n-even-for-odd-g";
pub const S2_SIGN: &str = "s2-sign";
pub const TOP_INDEX: &str = "top-index-vanishes-for-even-g";
pub const KSQ_INTEGRAL: &str = "ksq-integral";
pub const KSQ_RANGE: &str = "ksq-range";
pub const SLOPE_LOWER: &str = "slope-lower";
pub const SLOPE_UPPER: &str = "slope-upper";
pub const EULER_NONNEG: &str = "euler-nonnegative";
pub const MINUS_CURVE: &str = "minus-curve-ksq-cap";

/// Families a case emitted under `spec` has passed.
pub fn constraints_passed(spec: &SearchSpec, case: &FeasibleCase) -> Vec<&'static str> {
    let mut out = vec![CHI_EQUATION, N_INTEGRAL];
    if spec.require_n_parity && case.g % 2 == 1 {
        out.push(N_PARITY);
    }
    out.push(S2_SIGN);
    if case.g.is_multiple_of(2) {
        out.push(TOP_INDEX);
    }
    out.push(KSQ_INTEGRAL);
    if spec.ksq_range.is_some() {
        out.push(KSQ_RANGE);
    }
    out.extend([SLOPE_LOWER, SLOPE_UPPER, EULER_NONNEG]);
    if case.indices.s2() < 0 {
        out.push(MINUS_CURVE);
    }
    out
}

/// All feasible cases, sorted by `(g, K^2, indices)`.
pub fn enumerate(spec: &SearchSpec) -> Result<Vec<FeasibleCase>> {
    spec.validate()?;
    let per_genus: Vec<Vec<FeasibleCase>> = (spec.g_min..=spec.g_max)
        .into_par_iter()
        .map(|g| enumerate_genus(spec, g))
        .collect::<Result<_>>()?;
    let mut all: Vec<FeasibleCase> = per_genus.into_iter().flatten().collect();
    all.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(all)
}

struct Slot {
    j: u32,
    chi_coef: i128,
    excess_coef: i128,
    bound: i128,
}

fn enumerate_genus(spec: &SearchSpec, g: u32) -> Result<Vec<FeasibleCase>> {
    let chi = &spec.chi;
    let cap = spec.slope_cap.value(g)?;
    let lower = bounds::slope_lower(g)?;
    if cap < lower {
        return Ok(Vec::new());
    }
    let gi = g as i64;
    let target = int(4 * (2 * gi + 1)) * chi;
    if !target.is_integer() {
        return Ok(Vec::new());
    }
    let target = rational::floor_i128(&target)?;
    // sum_j x_j s_j <= g (cap - 4(g-1)/g) chi
    let excess_budget = rational::floor_i128(&((int(gi) * &cap - int(4 * (gi - 1))) * chi))?;
    if excess_budget < 0 {
        return Ok(Vec::new());
    }
    let use_chi_box = spec.s2_mode == S2Mode::NonNegative;

    let excess: BTreeMap<u32, i64> = invariants::slope_excess_coefficients(g).into_iter().collect();
    let mut slots = Vec::new();
    for (j, c) in invariants::chi_equation_coefficients(g) {
        if g.is_multiple_of(2) && j == g + 2 {
            continue;
        }
        let x = excess[&j] as i128;
        let c = c as i128;
        let mut bound: Option<i128> = None;
        if x > 0 {
            bound = Some(excess_budget / x);
        }
        if use_chi_box && c > 0 {
            let b2 = target / c;
            bound = Some(bound.map_or(b2, |b| b.min(b2)));
        }
        let bound = bound.ok_or_else(|| {
            Error::Unbounded(format!("s_{j} has no positive coefficient at g = {g}"))
        })?;
        slots.push(Slot {
            j,
            chi_coef: c,
            excess_coef: x,
            bound,
        });
    }

    let ksq_cap_negative = rational::floor_i64(&bounds::minus_curve_ksq_cap(2, chi)?)?;
    let lower_ksq = &lower * chi;
    let upper_ksq = &cap * chi;

    let mut out = Vec::new();
    let mut values = vec![0i64; slots.len()];
    let mut visit = |values: &[i64], chi_sum: i128| -> Result<()> {
        let rest = target - chi_sum;
        if rest % gi as i128 != 0 {
            return Ok(());
        }
        let s2 = i64::try_from(rest / gi as i128)
            .map_err(|_| Error::Overflow(format!("s_2 at g = {g}")))?;
        if !spec.s2_mode.admits(s2) {
            return Ok(());
        }
        let mut dense = vec![0i64; g as usize + 1];
        dense[0] = s2;
        for (slot, &v) in slots.iter().zip(values) {
            dense[(slot.j - 2) as usize] = v;
        }
        let si = SingularityIndices::from_dense(g, dense)?;
        let num = match invariants::numerics_with(&si, spec.b, spec.require_n_parity) {
            Ok(num) => num,
            Err(Error::NotGeometric { .. }) => return Ok(()),
            Err(e) => return Err(e),
        };
        debug_assert_eq!(&num.chi, chi);
        let Some(ksq) = rational::as_i64(&num.ksq) else {
            return Ok(());
        };
        if let Some((lo, hi)) = spec.ksq_range {
            if ksq < lo || ksq > hi {
                return Ok(());
            }
        }
        if num.ksq < lower_ksq || num.ksq > upper_ksq {
            return Ok(());
        }
        if num.e.is_negative() {
            return Ok(());
        }
        if s2 < 0 && ksq > ksq_cap_negative {
            return Ok(());
        }
        let n = num.n.to_integer().to_i64().ok_or_else(|| Error::Overflow("n".into()))?;
        out.push(FeasibleCase {
            g,
            ksq,
            n,
            indices: si,
            numerics: num,
        });
        Ok(())
    };
    search(&slots, 0, &mut values, 0, 0, target, excess_budget, use_chi_box, &mut visit)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search<F>(
    slots: &[Slot],
    depth: usize,
    values: &mut [i64],
    chi_sum: i128,
    excess_sum: i128,
    target: i128,
    excess_budget: i128,
    use_chi_box: bool,
    visit: &mut F,
) -> Result<()>
where
    F: FnMut(&[i64], i128) -> Result<()>,
{
    if depth == slots.len() {
        return visit(values, chi_sum);
    }
    let slot = &slots[depth];
    let mut v = 0i128;
    while v <= slot.bound {
        let cs = chi_sum + v * slot.chi_coef;
        let xs = excess_sum + v * slot.excess_coef;
        if xs > excess_budget || (use_chi_box && cs > target) {
            break;
        }
        values[depth] = v as i64;
        search(slots, depth + 1, values, cs, xs, target, excess_budget, use_chi_box, visit)?;
        v += 1;
    }
    values[depth] = 0;
    Ok(())
}

/// Largest genus among feasible cases, `None` when there are none.
pub fn max_genus(spec: &SearchSpec) -> Result<Option<u32>> {
    Ok(enumerate(spec)?.iter().map(|c| c.g).max())
}

/// `K^2 -> {g}` projection.
pub type KsqGenusTable = BTreeMap<i64, BTreeSet<u32>>;

pub fn project(cases: &[FeasibleCase]) -> KsqGenusTable {
    let mut table = KsqGenusTable::new();
    for c in cases {
        table.entry(c.ksq).or_default().insert(c.g);
    }
    table
}

/// The `(K^2, g)` list expected for `p_g = q = 1` with a hyperelliptic
/// Albanese fibration.
pub const EXPECTED_PG_Q_1_TABLE: &[(i64, &[u32])] = &[
    (9, &[4, 6, 8, 10]),
    (8, &[3, 4, 5, 6, 7, 8, 10, 11, 14]),
    (7, &[3, 4, 5, 6]),
    (6, &[2, 3, 4, 5, 6, 7, 8]),
    (5, &[2, 3, 4]),
    (4, &[2, 3, 4]),
    (3, &[2]),
    (2, &[2]),
];

pub fn expected_pg_q_1_table() -> KsqGenusTable {
    EXPECTED_PG_Q_1_TABLE
        .iter()
        .map(|(k, gs)| (*k, gs.iter().copied().collect()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtraPair {
    pub ksq: i64,
    pub g: u32,
    pub witnesses: Vec<FeasibleCase>,
    /// Constraint families every witness survives.
    pub survived: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub extra: Vec<ExtraPair>,
    pub missing: Vec<(i64, u32)>,
}

impl Discrepancy {
    pub fn is_empty(&self) -> bool {
        self.extra.is_empty() && self.missing.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub table: KsqGenusTable,
    pub cases: Vec<FeasibleCase>,
    pub discrepancy: Discrepancy,
}

impl Classification {
    /// Whether every row with some `g >= min_g` agrees with the expected table.
    pub fn agrees_from_genus(&self, min_g: u32) -> bool {
        let expected = expected_pg_q_1_table();
        let cut = |t: &KsqGenusTable| -> BTreeSet<(i64, u32)> {
            t.iter()
                .flat_map(|(k, gs)| gs.iter().filter(|&&g| g >= min_g).map(move |&g| (*k, g)))
                .collect()
        };
        cut(&self.table) == cut(&expected)
    }
}

/// The search bundle for `p_g = q = 1`: `chi = 1`, elliptic base, all `g`.
pub fn pg_q_1_specs() -> [SearchSpec; 2] {
    let base = SearchSpec::new(int(1), 1).parity(false);
    [base.clone().mode(S2Mode::NonNegative), base.mode(S2Mode::Negative)]
}

/// `(K^2, g)` table for `p_g = q = 1`, with a report of every pair that
/// differs from [`EXPECTED_PG_Q_1_TABLE`]. Surplus pairs are reported, never
/// dropped.
pub fn classify_pg_q_1() -> Result<Classification> {
    let mut cases = Vec::new();
    let mut spec_of = Vec::new();
    for spec in pg_q_1_specs() {
        for c in enumerate(&spec)? {
            spec_of.push(spec.clone());
            cases.push(c);
        }
    }
    let mut order: Vec<usize> = (0..cases.len()).collect();
    order.sort_by(|&a, &b| cases[a].sort_key().cmp(&cases[b].sort_key()));
    let cases: Vec<FeasibleCase> = order.iter().map(|&i| cases[i].clone()).collect();
    let spec_of: Vec<SearchSpec> = order.iter().map(|&i| spec_of[i].clone()).collect();

    let table = project(&cases);
    let expected = expected_pg_q_1_table();
    let mut discrepancy = Discrepancy::default();
    for (ksq, gs) in &table {
        for &g in gs {
            if expected.get(ksq).is_some_and(|e| e.contains(&g)) {
                continue;
            }
            let idx: Vec<usize> = (0..cases.len())
                .filter(|&i| cases[i].ksq == *ksq && cases[i].g == g)
                .collect();
            let mut survived: Option<Vec<&'static str>> = None;
            for &i in &idx {
                let here = constraints_passed(&spec_of[i], &cases[i]);
                survived = Some(match survived {
                    None => here,
                    Some(prev) => prev.into_iter().filter(|f| here.contains(f)).collect(),
                });
            }
            discrepancy.extra.push(ExtraPair {
                ksq: *ksq,
                g,
                witnesses: idx.iter().map(|&i| cases[i].clone()).collect(),
                survived: survived.unwrap_or_default().into_iter().map(String::from).collect(),
            });
        }
    }
    for (ksq, gs) in &expected {
        for &g in gs {
            if !table.get(ksq).is_some_and(|t| t.contains(&g)) {
                discrepancy.missing.push((*ksq, g));
            }
        }
    }
    Ok(Classification {
        table,
        cases,
        discrepancy,
    })
}
