//! Input generators shared by the benchmarks.

use dynnikov_core::{curve_kind, DynnikovCoord};

/// Essential curves with `|a|, |b| <= bound`, in row order.
pub fn essential_box(bound: i64) -> Vec<DynnikovCoord> {
    (-bound..=bound)
        .flat_map(|a| (-bound..=bound).filter_map(move |b| DynnikovCoord::new(a, b).ok()))
        .filter(|d| curve_kind(d).is_essential())
        .collect()
}

/// `(10^k + 1, 10^k)`-style coprime pair with `k` decimal digits.
pub fn wide_pair(k: u32) -> (String, String) {
    let n = "1".to_string() + &"0".repeat(k as usize);
    let m = "1".to_string() + &"0".repeat(k as usize - 1) + "1";
    (m, n)
}
