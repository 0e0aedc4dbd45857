//! Named verification suites over a shared range bound.

use crate::catalan::{
    verify_c_recursion_first, verify_c_recursion_second, verify_c_recursion_second_corrected,
    verify_catalan_recursion, verify_new_poly_id, verify_preimages, verify_supercatalan_corollary,
};
use crate::error::{Error, Result};
use crate::families::half::{half_integer_cycle, verify_half_values};
use crate::families::verify::*;
use crate::families::FamilyCache;
use crate::operators::{verify_euler_inverse, verify_example_a};
use crate::report::IdentityReport;

/// Suite ids in report order.
pub const SUITE_IDS: &[&str] = &[
    "defining-P",
    "defining-Q",
    "thm-summation",
    "a1a2-relation",
    "lemma-summation",
    "ptilde",
    "half-values",
    "half-cycle",
    "euler-inverse",
    "c-recursions",
    "catalan-recursion",
    "supercatalan-corollary",
    "new-poly-id",
    "example-a",
];

/// Runs one suite with every range bounded by `max`.
pub fn run_suite(id: &str, max: u32, cache: &FamilyCache) -> Result<Vec<IdentityReport>> {
    let reports = match id {
        "defining-P" => vec![verify_defining_p(max, cache), verify_p_anchors(max, cache)],
        "defining-Q" => vec![verify_defining_q(max, cache)],
        "thm-summation" => vec![verify_thm_summation(max, cache)],
        "a1a2-relation" => vec![verify_a1_a2_relation(max, cache), verify_a2_properties(max, cache)],
        "lemma-summation" => vec![verify_lemma_summation(max, max + 1)],
        "ptilde" => vec![verify_ptilde_summation(max, max, cache)],
        "half-values" => vec![verify_half_values(max, cache)],
        "half-cycle" => vec![half_integer_cycle(max, max, cache).report],
        "euler-inverse" => vec![verify_euler_inverse(max as usize)],
        "c-recursions" => vec![
            verify_preimages(max, max),
            verify_c_recursion_first(max),
            verify_c_recursion_second(max),
            verify_c_recursion_second_corrected(max),
        ],
        "catalan-recursion" => vec![verify_catalan_recursion(max, max)],
        "supercatalan-corollary" => vec![verify_supercatalan_corollary(max)],
        "new-poly-id" => vec![verify_new_poly_id(2, max, cache)],
        "example-a" => vec![verify_example_a(max as usize)],
        _ => return Err(Error::IndexOutOfRange(format!("unknown suite {id:?}"))),
    };
    Ok(reports)
}

/// Runs `ids` on scoped threads; the output follows the order of `ids`.
pub fn run_suites(ids: &[&str], max: u32, cache: &FamilyCache) -> Result<Vec<IdentityReport>> {
    let results: Vec<Result<Vec<IdentityReport>>> = std::thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .map(|id| s.spawn(move || run_suite(id, max, cache)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Expands `all` to every suite id.
pub fn resolve(id: &str) -> Result<Vec<&'static str>> {
    if id == "all" {
        return Ok(SUITE_IDS.to_vec());
    }
    SUITE_IDS
        .iter()
        .find(|s| **s == id)
        .map(|s| vec![*s])
        .ok_or_else(|| Error::IndexOutOfRange(format!("unknown suite {id:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_ids() {
        assert_eq!(resolve("all").unwrap().len(), SUITE_IDS.len());
        assert_eq!(resolve("ptilde").unwrap(), vec!["ptilde"]);
        assert!(resolve("nope").is_err());
    }

    #[test]
    fn small_run_in_order() {
        let cache = FamilyCache::new();
        let reports = run_suites(&["example-a", "defining-P"], 4, &cache).unwrap();
        let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, vec!["example-a", "defining-P", "P-anchors"]);
        assert!(reports.iter().all(|r| r.passed()));
    }

    #[test]
    fn c_recursions_reports_the_printed_weight() {
        let cache = FamilyCache::new();
        let reports = run_suite("c-recursions", 4, &cache).unwrap();
        let failing: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.id.as_str()).collect();
        assert_eq!(failing, vec!["c-recursion-second"]);
    }
}
