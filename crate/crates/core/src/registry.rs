use std::collections::BTreeMap;
use std::sync::Arc;

use crate::{Error, Result};

/// Something that can be registered under a stable name.
pub trait Named {
    fn name(&self) -> &'static str;
}

/// Name-indexed collection of interchangeable implementations of one trait.
///
/// Registering a second entry under an existing name replaces the first, which is how
/// tests inject faulty routes.
pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: BTreeMap<&'static str, Arc<T>>,
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Self {
            kind,
            entries: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, entry: Arc<T>) -> &mut Self {
        self.entries.insert(entry.name(), entry);
        self
    }

    pub fn get(&self, name: &str) -> Result<Arc<T>> {
        self.entries
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownRoute {
                kind: self.kind,
                name: name.to_owned(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<T>> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    trait Greeter: Named {
        fn greet(&self) -> String;
    }

    struct Loud(&'static str);

    impl Named for Loud {
        fn name(&self) -> &'static str {
            self.0
        }
    }

    impl Greeter for Loud {
        fn greet(&self) -> String {
            self.0.to_uppercase()
        }
    }

    #[test]
    fn lookup_and_replace() {
        let mut reg: Registry<dyn Greeter> = Registry::new("greeter");
        reg.register(Arc::new(Loud("a"))).register(Arc::new(Loud("b")));
        assert_eq!(reg.names(), vec!["a", "b"]);
        assert_eq!(reg.get("b").unwrap().greet(), "B");
        reg.register(Arc::new(Loud("a")));
        assert_eq!(reg.len(), 2);
        let err = reg.get("c").err().unwrap();
        assert!(err.to_string().contains("available: a, b"));
    }
}
