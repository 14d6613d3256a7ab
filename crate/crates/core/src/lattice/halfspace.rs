use super::{box_size, ceil_div, dot, ExponentVector};
use crate::error::{Error, Result};

/// The `<=_pr`-minimal points of `{alpha in N^n : weights . alpha >= threshold}`.
///
/// Minimal points live in the box `prod [0, ceil(t / w_i)]`. For each prefix
/// `(a_1, .., a_{n-1})` of that box only the smallest admissible last
/// coordinate can be minimal, so the scan runs over prefixes and the result is
/// minimalized. Output is sorted lexicographically.
pub fn minimal_points_halfspace(weights: &[u64], threshold: u64) -> Result<Vec<ExponentVector>> {
    if weights.is_empty() {
        return Err(Error::invalid("need at least one weight"));
    }
    if weights.contains(&0) {
        return Err(Error::invalid("weights must be positive"));
    }
    let n = weights.len();
    let t = threshold as u128;
    let bounds: Vec<u64> = weights
        .iter()
        .map(|&w| ceil_div(t, w as u128) as u64)
        .collect();
    box_size(&bounds[..n - 1])?;

    let last_w = weights[n - 1] as u128;
    let mut candidates = Vec::new();
    for mut prefix in super::BoxIter::new(&bounds[..n - 1]) {
        let partial = dot(&weights[..n - 1], &prefix);
        let need = t.saturating_sub(partial);
        let last = ceil_div(need, last_w);
        debug_assert!(last <= bounds[n - 1] as u128);
        prefix.push(last as u64);
        candidates.push(ExponentVector::from_vec_unchecked(prefix));
    }
    Ok(super::minimalize(candidates))
}
