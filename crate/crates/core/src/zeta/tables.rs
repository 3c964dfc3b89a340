//! Shared lazily-grown table of `ln n` (double-double) and `n^(-1/2)` for
//! the Dirichlet main sums.

use crate::dd::Dd;
use once_cell::sync::Lazy;
use std::sync::{Arc, RwLock};

#[derive(Clone, Copy)]
pub(crate) struct Entry {
    pub ln: Dd,
    pub rsqrt: f64,
}

static TABLE: Lazy<RwLock<Arc<Vec<Entry>>>> = Lazy::new(|| RwLock::new(Arc::new(Vec::new())));

/// Returns a snapshot covering `1..=n_max` (index 0 unused).
pub(crate) fn ln_table(n_max: usize) -> Arc<Vec<Entry>> {
    {
        let guard = TABLE.read().expect("table lock");
        if guard.len() > n_max {
            return Arc::clone(&guard);
        }
    }
    let mut guard = TABLE.write().expect("table lock");
    if guard.len() <= n_max {
        let target = (n_max + 1).next_power_of_two().max(1024);
        let mut grown = Vec::with_capacity(target);
        grown.extend_from_slice(guard.as_slice());
        if grown.is_empty() {
            grown.push(Entry { ln: Dd::ZERO, rsqrt: f64::NAN }); // n = 0 placeholder
        }
        for n in grown.len()..target {
            grown.push(Entry {
                ln: Dd::from_f64(n as f64).ln(),
                rsqrt: 1.0 / (n as f64).sqrt(),
            });
        }
        *guard = Arc::new(grown);
    }
    Arc::clone(&guard)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_grows_and_is_consistent() {
        let t = ln_table(10);
        assert!(t.len() > 10);
        let t2 = ln_table(5000);
        assert!(t2.len() > 5000);
        for n in [2usize, 10, 999, 4999] {
            let direct = Dd::from_f64(n as f64).ln();
            assert!(t2[n].ln.sub(direct).to_f64().abs() < 1e-28);
            assert_eq!(t2[n].rsqrt, 1.0 / (n as f64).sqrt());
        }
    }
}
