use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

/// A read-mostly cache. Values are pure functions of their keys, so a fill
/// racing another fill for the same key stores an identical value.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Copy, V: Clone> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_try_fill<E>(
        &self,
        key: K,
        fill: impl FnOnce() -> Result<V, E>,
    ) -> Result<V, E> {
        if let Some(v) = self.map.read().expect("memo lock poisoned").get(&key) {
            return Ok(v.clone());
        }
        let value = fill()?;
        let mut map = self.map.write().expect("memo lock poisoned");
        Ok(map.entry(key).or_insert(value).clone())
    }
}
