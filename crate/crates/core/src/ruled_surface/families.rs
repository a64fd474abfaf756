//! The three sharpness families: double covers of a blown-up ruled surface
//! over an elliptic curve whose relative invariants sit exactly on a genus
//! bound.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::lattice::{
    branch_n, double_cover_invariants, fiber_genus_from_branch, halve_even_class, intersect, s2_of_smooth_branch,
    DivisorClass, SurfaceModel,
};
use crate::bounds::{self, Parity};
use crate::error::{Error, Result};
use crate::invariants::{self, FibrationNumerics, SingularityIndices};
use crate::rational::{self, as_i64, frac, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum Family {
    /// Split bundle with torsion of order `m`, branch `(2g+2)C_0 + 2Γ`
    /// through one point of multiplicity `2k`. Odd `k >= 3`, `m >= k+2`.
    Ex51 { k: u32, m: u32 },
    /// Indecomposable bundle, branch `(2g+2)C - gΓ` through one point of
    /// multiplicity `2k`, `g = (k+1)^2`. Odd `k >= 1`.
    Ex52 { k: u32 },
    /// Indecomposable bundle, branch `(2g+2)C + (n-1-g)Γ` through one point
    /// of multiplicity 4, `g = (2chi+2)/n`.
    Ex53 { n: u32, chi: u32 },
}

impl Family {
    pub fn ex51(k: u32) -> Self {
        Family::Ex51 { k, m: k + 2 }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Family::Ex51 { .. } => "ex51",
            Family::Ex52 { .. } => "ex52",
            Family::Ex53 { .. } => "ex53",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Domain(msg));
        match *self {
            Family::Ex51 { k, m } => {
                if k < 3 || k % 2 == 0 {
                    return bad(format!("ex51 needs odd k >= 3, got {k}"));
                }
                if m < k + 2 {
                    return bad(format!("ex51 needs torsion order m >= k+2 = {}, got {m}", k + 2));
                }
            }
            Family::Ex52 { k } => {
                if k == 0 || k % 2 == 0 {
                    return bad(format!("ex52 needs odd k >= 1, got {k}"));
                }
            }
            Family::Ex53 { n, chi } => {
                if n == 0 || chi < 6 {
                    return bad(format!("ex53 needs n >= 1 and chi >= 6, got n = {n}, chi = {chi}"));
                }
                if (2 * chi + 2) % n != 0 {
                    return bad(format!("ex53 needs n | 2chi+2, got n = {n}, chi = {chi}"));
                }
                let g = (2 * chi + 2) / n;
                // At g = 2 the 4-fold point would be the forbidden top index.
                if g < 3 {
                    return bad(format!("ex53 needs g = (2chi+2)/n >= 3, got {g}"));
                }
                if g % 2 != (n + 1) % 2 {
                    return bad(format!("ex53 needs g = n-1 mod 2, got g = {g}, n = {n}"));
                }
            }
        }
        Ok(())
    }

    pub fn genus(&self) -> u32 {
        match *self {
            Family::Ex51 { k, .. } => (k - 1) * (k + 3) / 2 + 1,
            Family::Ex52 { k } => (k + 1) * (k + 1),
            Family::Ex53 { n, chi } => (2 * chi + 2) / n,
        }
    }

    /// Multiplicity of the single singular point of the branch curve.
    pub fn multiplicity(&self) -> i64 {
        match *self {
            Family::Ex51 { k, .. } | Family::Ex52 { k } => 2 * k as i64,
            Family::Ex53 { .. } => 4,
        }
    }

    fn base_surface(&self) -> Result<SurfaceModel> {
        match *self {
            Family::Ex51 { m, .. } => SurfaceModel::split_torsion(m),
            _ => Ok(SurfaceModel::indec_deg1()),
        }
    }

    fn branch(&self) -> DivisorClass {
        let g = self.genus() as i64;
        match *self {
            Family::Ex51 { .. } => DivisorClass::base(2 * g + 2, 2),
            Family::Ex52 { .. } => DivisorClass::base(2 * g + 2, -g),
            Family::Ex53 { n, .. } => DivisorClass::base(2 * g + 2, n as i64 - 1 - g),
        }
    }
}

/// Every valid `(n, chi)` for [`Family::Ex53`] with `chi` in the range.
pub fn ex53_parameters(chi_lo: u32, chi_hi: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for chi in chi_lo.max(6)..=chi_hi {
        for n in 1..=2 * chi + 2 {
            if (Family::Ex53 { n, chi }).validate().is_ok() {
                out.push((n, chi));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleData {
    pub family: Family,
    pub g: u32,
    /// The ruled surface before blowing up.
    pub base_surface: SurfaceModel,
    pub surface: SurfaceModel,
    /// Branch class on the unblown surface.
    pub branch: DivisorClass,
    pub branch_tilde: DivisorClass,
    pub delta_tilde: DivisorClass,
    pub multiplicity: i64,
    /// `(K + R̃)·R̃` on the blown-up surface.
    pub s2_smooth_branch: i64,
    pub indices: SingularityIndices,
    /// Invariants from the singularity indices.
    pub numerics: FibrationNumerics,
    #[serde(with = "rational::rational_str")]
    pub cover_chi: Rational,
    #[serde(with = "rational::rational_str")]
    pub cover_ksq: Rational,
    #[serde(with = "rational::rational_str")]
    pub branch_n: Rational,
}

pub fn build_example(family: Family) -> Result<ExampleData> {
    family.validate()?;
    let base_surface = family.base_surface()?;
    let surface = base_surface.blown_up(1);
    let branch = family.branch();
    let g = fiber_genus_from_branch(&branch)?;
    debug_assert_eq!(g, family.genus());
    let mult = family.multiplicity();
    let branch_tilde = branch.minus_exceptional(&[mult]);
    let delta_tilde = halve_even_class(&branch_tilde)?;
    let (cover_chi, cover_ksq) = double_cover_invariants(&surface, &delta_tilde)?;
    let s2_smooth = s2_of_smooth_branch(&surface, &branch_tilde)?;
    let indices = if mult == 2 {
        // A double point is a negligible singularity: it is not resolved, and
        // s_2 is computed on the unblown surface with no other index.
        SingularityIndices::new(g, [(2, s2_of_smooth_branch(&base_surface, &branch)?)])?
    } else {
        SingularityIndices::new(g, [(2, s2_smooth), (mult as u32, 1)])?
    };
    let numerics = invariants::numerics(&indices, 1)?;
    let n = branch_n(&branch, &base_surface)?;
    Ok(ExampleData {
        family,
        g,
        base_surface,
        surface,
        branch,
        branch_tilde,
        delta_tilde,
        multiplicity: mult,
        s2_smooth_branch: s2_smooth,
        indices,
        numerics,
        cover_chi,
        cover_ksq,
        branch_n: n,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    fn eq(name: &str, lhs: &Rational, rhs: &Rational) -> Self {
        Check {
            name: name.to_string(),
            lhs: rational::fmt_rational(lhs),
            rhs: rational::fmt_rational(rhs),
            pass: lhs == rhs,
            note: None,
        }
    }

    fn noted(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub family: Family,
    pub g: u32,
    #[serde(with = "rational::rational_str")]
    pub chi: Rational,
    #[serde(with = "rational::rational_str")]
    pub ksq: Rational,
    #[serde(with = "rational::rational_str")]
    pub n: Rational,
    #[serde(with = "rational::opt_rational_str")]
    pub lambda: Option<Rational>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

pub fn verify_sharpness(ex: &ExampleData) -> Result<SharpnessReport> {
    let num = &ex.numerics;
    let g = int(ex.g as i64);
    let lambda = num
        .lambda
        .clone()
        .ok_or_else(|| Error::Domain("example has chi <= 0".into()))?;
    let mut checks = vec![
        Check::eq("cover chi = index chi", &ex.cover_chi, &num.chi),
        Check::eq("cover K^2 = index K^2", &ex.cover_ksq, &num.ksq),
        Check::eq("branch n = index n", &ex.branch_n, &num.n),
        Check::eq("12 chi = K^2 + e", &(int(12) * &num.chi), &(&num.ksq + &num.e)),
        Check::eq(
            "R~.E = multiplicity",
            &int(intersect(
                &ex.branch_tilde,
                &DivisorClass::exceptional(0, ex.surface.blowups),
                &ex.surface,
            )?),
            &int(ex.multiplicity),
        ),
        Check {
            name: "R~ = 2 delta~".into(),
            lhs: ex.branch_tilde.render(&ex.surface),
            rhs: ex.delta_tilde.scaled(2).render(&ex.surface),
            pass: ex.branch_tilde == ex.delta_tilde.scaled(2),
            note: None,
        },
    ];
    let n_int = as_i64(&num.n).ok_or_else(|| Error::Domain("n is not an integer".into()))?;
    match ex.family {
        Family::Ex51 { k, .. } => {
            let k = k as i64;
            checks.push(Check::eq("chi = (3k-1)/2", &num.chi, &frac(3 * k - 1, 2)));
            checks.push(Check::eq("K^2 = 8k-8", &num.ksq, &int(8 * k - 8)));
            checks.push(Check::eq("s2 = 10k", &int(ex.s2_smooth_branch), &int(10 * k)));
            checks.push(Check::eq(
                "lambda = 16/3 - 32/(3(3k-1))",
                &lambda,
                &(frac(16, 3) - frac(32, 3 * (3 * k - 1))),
            ));
            let bound = bounds::g_bound_fn(&lambda, &num.chi, n_int)?;
            checks.push(Check::eq("g = g_bound_fn(lambda, chi, n)", &g, &bound));
        }
        Family::Ex52 { k } => {
            let k = k as i64;
            checks.push(Check::eq("chi = (3k+1)/2", &num.chi, &frac(3 * k + 1, 2)));
            checks.push(Check::eq("K^2 = 8k-2", &num.ksq, &int(8 * k - 2)));
            checks.push(Check::eq("n = 1", &num.n, &int(1)));
            checks.push(Check::eq("s2 = 10k+6", &int(ex.s2_smooth_branch), &int(10 * k + 6)));
            checks.push(Check::eq(
                "lambda = 16/3 - 28/(3(3k+1))",
                &lambda,
                &(frac(16, 3) - frac(28, 3 * (3 * k + 1))),
            ));
            let mut c = Check::eq(
                "g = g_bound_fn(lambda, chi, n)",
                &g,
                &bounds::g_bound_fn(&lambda, &num.chi, n_int)?,
            );
            if lambda <= int(4) {
                c = c.noted("lambda <= 4, outside the bound's hypotheses");
            }
            checks.push(c);
            checks.push(Check::eq(
                "g = large-genus bound (even g)",
                &g,
                &bounds::bound_prop41(&lambda, &num.chi, Parity::Even),
            ));
        }
        Family::Ex53 { n, chi } => {
            let (n, chi) = (n as i64, chi as i64);
            checks.push(Check::eq("chi = chi_n", &num.chi, &int(chi)));
            checks.push(Check::eq("K^2 = 4chi - 2(n-1)", &num.ksq, &int(4 * chi - 2 * (n - 1))));
            checks.push(Check::eq("s2 = 8chi + 2n - 4", &int(ex.s2_smooth_branch), &int(8 * chi + 2 * n - 4)));
            let bound = bounds::low_slope_bound(&num.chi, &num.ksq)?;
            checks.push(Check::eq("g = (4chi+4)/(2+4chi-K^2)", &g, &bound));
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(SharpnessReport {
        family: ex.family,
        g: ex.g,
        chi: num.chi.clone(),
        ksq: num.ksq.clone(),
        n: num.n.clone(),
        lambda: Some(lambda),
        checks,
        pass,
    })
}

/// Human-readable certificate for one example.
pub fn certificate(ex: &ExampleData, report: &SharpnessReport) -> String {
    let f = rational::fmt_rational;
    let mut out = String::new();
    let _ = writeln!(out, "example {} {}", ex.family.tag(), params_text(&ex.family));
    let _ = writeln!(out, "  surface      {}", ex.surface);
    let _ = writeln!(out, "  branch       R  = {}", ex.branch.render(&ex.base_surface));
    let _ = writeln!(out, "  strict       R~ = {}", ex.branch_tilde.render(&ex.surface));
    let _ = writeln!(out, "  half         d~ = {}", ex.delta_tilde.render(&ex.surface));
    let _ = writeln!(out, "  indices      {}", ex.indices);
    let _ = writeln!(
        out,
        "  invariants   g = {}  chi = {}  K^2 = {}  n = {}  lambda = {}",
        report.g,
        f(&report.chi),
        f(&report.ksq),
        f(&report.n),
        report.lambda.as_ref().map(f).unwrap_or_else(|| "-".into())
    );
    for c in &report.checks {
        let mark = if c.pass { "ok  " } else { "FAIL" };
        let _ = write!(out, "  [{mark}] {}: {} vs {}", c.name, c.lhs, c.rhs);
        if let Some(note) = &c.note {
            let _ = write!(out, " ({note})");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "  result       {}", if report.pass { "PASS" } else { "FAIL" });
    out
}

pub fn params_text(f: &Family) -> String {
    match *f {
        Family::Ex51 { k, m } => format!("k={k} m={m}"),
        Family::Ex52 { k } => format!("k={k}"),
        Family::Ex53 { n, chi } => format!("n={n} chi={chi}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ex51_k3() {
        let ex = build_example(Family::Ex51 { k: 3, m: 5 }).unwrap();
        assert_eq!(ex.g, 7);
        assert_eq!(ex.delta_tilde, DivisorClass::new(8, 1, vec![3]));
        assert_eq!((ex.cover_chi.clone(), ex.cover_ksq.clone()), (int(4), int(16)));
        assert_eq!(ex.s2_smooth_branch, 30);
        assert_eq!(ex.branch_n, int(2));
        assert_eq!(ex.numerics.lambda, Some(int(4)));
        assert!(verify_sharpness(&ex).unwrap().pass);
    }

    #[test]
    fn ex51_k5_bound_is_17() {
        let ex = build_example(Family::ex51(5)).unwrap();
        let r = verify_sharpness(&ex).unwrap();
        assert_eq!(r.g, 17);
        assert_eq!(r.chi, int(7));
        assert_eq!(r.lambda, Some(frac(32, 7)));
        assert!(r.pass);
    }

    #[test]
    fn ex52_examples() {
        let ex = build_example(Family::Ex52 { k: 1 }).unwrap();
        assert_eq!(ex.g, 4);
        assert_eq!(ex.delta_tilde, DivisorClass::new(5, -2, vec![1]));
        assert_eq!((ex.cover_chi.clone(), ex.cover_ksq.clone()), (int(2), int(6)));
        assert_eq!(ex.indices.nonzero(), vec![(2, 18)]);
        let r = verify_sharpness(&ex).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.lambda, Some(int(3)));

        let ex = build_example(Family::Ex52 { k: 3 }).unwrap();
        assert_eq!(ex.g, 16);
        assert_eq!(ex.indices.nonzero(), vec![(2, 36), (6, 1)]);
        assert_eq!((ex.numerics.chi.clone(), ex.numerics.ksq.clone()), (int(5), int(22)));
        assert_eq!(ex.branch_n, int(1));
    }

    #[test]
    fn ex53_examples() {
        let ex = build_example(Family::Ex53 { n: 1, chi: 6 }).unwrap();
        assert_eq!(ex.g, 14);
        assert_eq!((ex.cover_chi.clone(), ex.cover_ksq.clone()), (int(6), int(24)));
        let ex = build_example(Family::Ex53 { n: 4, chi: 9 }).unwrap();
        assert_eq!((ex.g, ex.numerics.ksq.clone()), (5, int(30)));
        let ex = build_example(Family::Ex53 { n: 2, chi: 8 }).unwrap();
        assert_eq!((ex.g, ex.numerics.ksq.clone()), (9, int(30)));
        assert!(verify_sharpness(&ex).unwrap().pass);
    }

    #[test]
    fn parameter_violations() {
        for f in [
            Family::Ex51 { k: 4, m: 6 },
            Family::Ex51 { k: 3, m: 4 },
            Family::Ex51 { k: 1, m: 3 },
            Family::Ex52 { k: 2 },
            Family::Ex53 { n: 3, chi: 6 },
            Family::Ex53 { n: 1, chi: 5 },
            Family::Ex53 { n: 7, chi: 6 },
            Family::Ex53 { n: 2, chi: 9 },
        ] {
            assert_eq!(build_example(f).unwrap_err().kind(), "domain", "{f:?}");
        }
    }

    #[test]
    fn families_sweep() {
        let mut fams: Vec<Family> = [3, 5, 7, 9, 11].into_iter().map(Family::ex51).collect();
        fams.extend([1, 3, 5, 7].into_iter().map(|k| Family::Ex52 { k }));
        fams.extend(ex53_parameters(6, 20).into_iter().map(|(n, chi)| Family::Ex53 { n, chi }));
        for f in fams {
            let ex = build_example(f).unwrap();
            assert_eq!(ex.branch_n, ex.numerics.n, "{f:?}");
            assert!(ex.branch_n.is_integer());
            let r = verify_sharpness(&ex).unwrap();
            assert!(r.pass, "{}", certificate(&ex, &r));
        }
    }

    #[test]
    fn ex53_parameter_list() {
        assert_eq!(ex53_parameters(6, 6), vec![(1, 6), (2, 6)]);
        assert!(ex53_parameters(6, 20).contains(&(4, 9)));
    }

    #[test]
    fn certificate_mentions_result() {
        let ex = build_example(Family::Ex53 { n: 1, chi: 6 }).unwrap();
        let text = certificate(&ex, &verify_sharpness(&ex).unwrap());
        assert!(text.contains("result       PASS"));
        assert!(text.contains("R  = 30C - 14G"));
    }
}
