use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use rug::Float;

use crate::error::Result;

/// What a cached value is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CacheKey {
    Pi,
    Ln2,
    LnPi,
    EulerGamma,
    ZetaPrimeEven(u32),
    BetaPrimeOdd(u32),
    EtaPrimeNeg(u32),
    BetaPrimeNeg(u32),
}

/// Process-wide cache of constants keyed by `(key, digits)`.
///
/// A value is computed outside the lock and published once; later hits return
/// a clone of the same bits.
#[derive(Default)]
pub struct ConstantCache {
    map: RwLock<HashMap<(CacheKey, u32), Float>>,
}

impl ConstantCache {
    pub fn global() -> &'static ConstantCache {
        static CACHE: OnceLock<ConstantCache> = OnceLock::new();
        CACHE.get_or_init(ConstantCache::default)
    }

    pub fn get(&self, key: CacheKey, digits: u32) -> Option<Float> {
        self.map.read().unwrap().get(&(key, digits)).cloned()
    }

    pub fn get_or_try_insert(
        &self,
        key: CacheKey,
        digits: u32,
        compute: impl FnOnce() -> Result<Float>,
    ) -> Result<Float> {
        if let Some(v) = self.get(key, digits) {
            return Ok(v);
        }
        let v = compute()?;
        let mut map = self.map.write().unwrap();
        // A racing thread may have published first; keep its value so every
        // reader sees the same bits.
        Ok(map.entry((key, digits)).or_insert(v).clone())
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_publication_wins() {
        let c = ConstantCache::default();
        let a = c.get_or_try_insert(CacheKey::Pi, 10, || Ok(Float::with_val(64, 3))).unwrap();
        let b = c.get_or_try_insert(CacheKey::Pi, 10, || Ok(Float::with_val(64, 4))).unwrap();
        assert_eq!(a, b);
        assert_eq!(c.len(), 1);
    }
}
