//! Seeded single-rule faults for mutation testing of the law suite.
//!
//! A mutation is active only on the current thread and only inside
//! [`with_mutation`]; normal callers never observe one.

use std::cell::Cell;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// The tds step picks the shortest instead of the longest segment in `m[c+1]`.
    TdsPicksShortest,
    /// Removable-free sections end at `a_{i,j+1} - 1` instead of `a_{i,j+1} - 2`.
    RfUpperBoundOffByOne,
    /// The St-derivative in the Langlands form skips the check that the selection reaches `a`.
    SkipSelectionReachesStart,
    /// Zelevinsky derivative removal chains start at `a` instead of `a - 1`.
    ZelChainStartsAtA,
    /// Zelevinsky integral drops the singleton contributed by a void entry.
    ZelIntegralDropsVoidSingleton,
}

impl Mutation {
    pub const ALL: [Mutation; 5] = [
        Mutation::TdsPicksShortest,
        Mutation::RfUpperBoundOffByOne,
        Mutation::SkipSelectionReachesStart,
        Mutation::ZelChainStartsAtA,
        Mutation::ZelIntegralDropsVoidSingleton,
    ];
}

thread_local! {
    static ACTIVE: Cell<Option<Mutation>> = const { Cell::new(None) };
}

/// Runs `f` with `mutation` active on this thread.
pub fn with_mutation<T>(mutation: Mutation, f: impl FnOnce() -> T) -> T {
    struct Reset(Option<Mutation>);
    impl Drop for Reset {
        fn drop(&mut self) {
            ACTIVE.with(|c| c.set(self.0));
        }
    }
    let _reset = Reset(ACTIVE.with(|c| c.replace(Some(mutation))));
    f()
}

#[inline]
pub(crate) fn active(m: Mutation) -> bool {
    ACTIVE.with(|c| c.get() == Some(m))
}
