//! Name-keyed registries of interchangeable strategies.

use crate::Error;

/// Something that can be looked up by name.
pub trait Named {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
}

/// Strategies in registration order; lookup is by exact name.
pub struct Registry<T: ?Sized + Named> {
    what: &'static str,
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn new(what: &'static str) -> Self {
        Registry {
            what,
            entries: Vec::new(),
        }
    }

    /// Later registrations under an existing name replace the earlier one.
    pub fn register(&mut self, item: Box<T>) -> &mut Self {
        match self.entries.iter().position(|e| e.name() == item.name()) {
            Some(i) => self.entries[i] = item,
            None => self.entries.push(item),
        }
        self
    }

    pub fn get(&self, name: &str) -> Result<&T, Error> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownName {
                what: self.what,
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|b| b.as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Fixed(&'static str, &'static str);

    impl Named for Fixed {
        fn name(&self) -> &'static str {
            self.0
        }
        fn summary(&self) -> &'static str {
            self.1
        }
    }

    #[test]
    fn lookup_and_replace() {
        let mut r: Registry<Fixed> = Registry::new("thing");
        r.register(Box::new(Fixed("a", "first")))
            .register(Box::new(Fixed("b", "second")));
        r.register(Box::new(Fixed("a", "replaced")));
        assert_eq!(r.names(), ["a", "b"]);
        assert_eq!(r.get("a").unwrap().summary(), "replaced");
        let err = r.get("c").err().unwrap().to_string();
        assert!(err.contains("available: a, b"), "{err}");
    }
}
