use serde::Serialize;

/// Result of a budgeted search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Search<T> {
    Decided(T),
    Undecided { explored: u64 },
}

impl<T> Search<T> {
    pub fn decided(self) -> Option<T> {
        match self {
            Search::Decided(t) => Some(t),
            Search::Undecided { .. } => None,
        }
    }
}
