//! Process-wide memo tables, safe for concurrent readers and writers.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Hash + Eq + Clone, V: PartialEq + Debug> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo { map: RwLock::new(HashMap::new()) }
    }

    /// Cached value for `key`, computing it outside the lock on a miss so that
    /// `compute` may recurse into the same table.
    pub(crate) fn get_or_compute(&self, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.read().unwrap().get(key) {
            return v.clone();
        }
        let fresh = Arc::new(compute());
        let mut map = self.map.write().unwrap();
        match map.get(key) {
            Some(existing) => {
                debug_assert_eq!(**existing, *fresh, "memo entry recomputed differently");
                existing.clone()
            }
            None => {
                map.insert(key.clone(), fresh.clone());
                fresh
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    #[test]
    fn computes_once_and_allows_recursion() {
        let memo: Memo<u32, u64> = Memo::new();
        let calls = AtomicUsize::new(0);
        fn fib(m: &Memo<u32, u64>, calls: &AtomicUsize, n: u32) -> u64 {
            *m.get_or_compute(&n, || {
                calls.fetch_add(1, Ordering::SeqCst);
                if n < 2 {
                    n as u64
                } else {
                    fib(m, calls, n - 1) + fib(m, calls, n - 2)
                }
            })
        }
        assert_eq!(fib(&memo, &calls, 40), 102334155);
        assert_eq!(calls.load(Ordering::SeqCst), 41);
        let threads: Vec<_> = (0..4).map(|_| std::thread::scope(|s| s.spawn(|| fib(&memo, &calls, 40)).join().unwrap())).collect();
        assert!(threads.iter().all(|&v| v == 102334155));
        assert_eq!(calls.load(Ordering::SeqCst), 41);
    }
}
