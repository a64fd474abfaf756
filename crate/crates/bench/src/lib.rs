//! Fixtures shared by the benchmarks.

use hypfib_core::invariants::SingularityIndices;
use hypfib_core::ruled_surface::Family;

/// Index vectors of assorted genera, all with non-negative entries.
pub fn index_vectors() -> Vec<SingularityIndices> {
    let mut out = Vec::new();
    for g in [2u32, 7, 14, 25, 40] {
        let mut dense = vec![0i64; g as usize + 1];
        for (i, slot) in dense.iter_mut().enumerate() {
            *slot = ((i * 7 + g as usize) % 5) as i64;
        }
        if g % 2 == 0 {
            *dense.last_mut().unwrap() = 0;
        }
        dense[0] = 40;
        out.push(SingularityIndices::from_dense(g, dense).expect("valid fixture"));
    }
    out
}

/// The ampleness claims checked by the acceptance suite.
pub fn claim_families() -> Vec<Family> {
    vec![
        Family::Ex51 { k: 3, m: 5 },
        Family::Ex52 { k: 1 },
        Family::Ex52 { k: 3 },
        Family::Ex53 { n: 1, chi: 6 },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        assert_eq!(index_vectors().len(), 5);
        for f in claim_families() {
            assert!(f.validate().is_ok());
        }
    }
}
