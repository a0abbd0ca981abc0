//! The three memoized passes over spans `(L, R)` with connector-list tails
//! `(l, r)`: counting legal linkages, the minimum number of null links, and
//! the number of linkages attaining it.
//!
//! Word `N` is a virtual right boundary with no connectors. Lists are
//! consumed farthest connector first. A null link always joins `L` to `L + 1`
//! and is only laid when neither end of the span has connectors left to
//! satisfy; the word after it starts a fresh span, either with a disjunct that
//! has no left connectors or with no links of its own.

mod compiled;
mod enumerate;

use std::fmt;
use std::rc::Rc;
use std::time::{Duration, Instant};

use rustc_hash::FxHashMap;

use crate::error::ParseError;
use crate::pruning::{DisjunctTable, FastMatchIndex, PruneStats};
use compiled::{Compiled, NIL};

/// Linkage counts saturate at `u128::MAX`.
pub type Count = u128;

/// A number of null links, or infinity when no chained linkage exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cost(u32);

impl Cost {
    pub const ZERO: Cost = Cost(0);
    pub const INFINITE: Cost = Cost(u32::MAX);

    pub fn new(n: u32) -> Self {
        assert!(n != u32::MAX, "finite cost out of range");
        Cost(n)
    }

    pub fn is_finite(self) -> bool {
        self != Cost::INFINITE
    }

    pub fn value(self) -> Option<u32> {
        self.is_finite().then_some(self.0)
    }

    fn plus(self, other: Cost) -> Cost {
        if self.is_finite() && other.is_finite() {
            Cost(self.0 + other.0)
        } else {
            Cost::INFINITE
        }
    }

    fn succ(self) -> Cost {
        self.plus(Cost(1))
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(n) => write!(f, "{n}"),
            None => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineOptions {
    pub max_link_length: Option<usize>,
    /// Turning memoization off changes nothing but running time.
    pub memoize: bool,
    /// Memo entries allowed across all passes before giving up.
    pub max_memo_entries: usize,
    pub max_words: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            max_link_length: None,
            memoize: true,
            max_memo_entries: 20_000_000,
            max_words: 250,
        }
    }
}

/// Number of recursive calls made by each pass.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PassCounters {
    pub count: u64,
    pub chained: u64,
    pub cost: u64,
    pub min_cost_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseResult {
    pub grammatical_count: Count,
    pub min_cost: u32,
    pub min_cost_count: Count,
    pub counters: PassCounters,
    pub elapsed: Duration,
    pub prune_stats: PruneStats,
}

impl ParseResult {
    pub fn is_grammatical(&self) -> bool {
        self.grammatical_count > 0
    }
}

type Key = u128;

fn key(lw: usize, rw: usize, l: u32, r: u32) -> Key {
    (lw as u128) << 96 | (rw as u128) << 64 | (l as u128) << 32 | r as u128
}

#[derive(Default)]
struct Memo {
    count: FxHashMap<Key, Count>,
    chained: FxHashMap<Key, Count>,
    cost: FxHashMap<Key, Cost>,
    min_cost_count: FxHashMap<Key, Count>,
}

impl Memo {
    fn len(&self) -> usize {
        self.count.len() + self.chained.len() + self.cost.len() + self.min_cost_count.len()
    }
}

/// Parser state for one sentence. Results of every pass stay memoized for
/// the lifetime of the engine.
pub struct Engine {
    c: Rc<Compiled>,
    table: DisjunctTable,
    opts: EngineOptions,
    memo: Memo,
    counters: PassCounters,
    exhausted: bool,
}

macro_rules! memoized {
    ($self:ident, $table:ident, $key:expr, $body:block) => {{
        let k = $key;
        if $self.opts.memoize {
            if let Some(&v) = $self.memo.$table.get(&k) {
                return v;
            }
        }
        let v = $body;
        if $self.opts.memoize && !$self.exhausted {
            if $self.memo.len() >= $self.opts.max_memo_entries {
                $self.exhausted = true;
            } else {
                $self.memo.$table.insert(k, v);
            }
        }
        v
    }};
}

impl Engine {
    pub fn new(index: &FastMatchIndex, opts: EngineOptions) -> Result<Self, ParseError> {
        let words = index.table().len();
        if words == 0 {
            return Err(ParseError::EmptySentence);
        }
        if words > opts.max_words {
            return Err(ParseError::TooManyWords {
                words,
                limit: opts.max_words,
            });
        }
        Ok(Engine {
            c: Rc::new(Compiled::new(index, opts.max_link_length)),
            table: index.table().clone(),
            opts,
            memo: Memo::default(),
            counters: PassCounters::default(),
            exhausted: false,
        })
    }

    /// The table the engine parses; linkage choices index into it.
    pub fn table(&self) -> &DisjunctTable {
        &self.table
    }

    pub fn counters(&self) -> PassCounters {
        self.counters
    }

    pub fn memo_entries(&self) -> usize {
        self.memo.len()
    }

    /// Fails if the memo cap was hit; results computed since are not valid.
    /// The three passes in order; passes two and three are skipped when the
    /// sentence is grammatical.
    pub fn run(&mut self) -> Result<ParseResult, ParseError> {
        let start = Instant::now();
        let grammatical = self.count_grammatical();
        self.check_limit()?;
        let (min_cost, min_cost_count) = if grammatical > 0 {
            (0, grammatical)
        } else {
            let cost = self.min_cost();
            let n = self.count_min_cost();
            self.check_limit()?;
            (cost.value().expect("a chain of null links always exists"), n)
        };
        Ok(ParseResult {
            grammatical_count: grammatical,
            min_cost,
            min_cost_count,
            counters: self.counters(),
            elapsed: start.elapsed(),
            prune_stats: PruneStats::default(),
        })
    }

    pub fn check_limit(&self) -> Result<(), ParseError> {
        if self.exhausted {
            Err(ParseError::ResourceLimit {
                limit: self.opts.max_memo_entries,
            })
        } else {
            Ok(())
        }
    }

    fn n(&self) -> usize {
        self.c.words
    }

    /// Number of legal linkages.
    pub fn count_grammatical(&mut self) -> Count {
        let c = Rc::clone(&self.c);
        let n = self.n();
        c.nil_left[0].iter().fold(0, |acc: Count, &d| {
            acc.saturating_add(self.count(0, n, c.disjuncts[0][d as usize].1, NIL))
        })
    }

    /// Number of chained linkages of any cost.
    pub fn count_chained(&mut self) -> Count {
        let c = Rc::clone(&self.c);
        let n = self.n();
        let mut total = self.chained(0, n, NIL, NIL);
        for &d in &c.nil_left_nonempty[0] {
            total = total.saturating_add(self.chained(0, n, c.disjuncts[0][d as usize].1, NIL));
        }
        total
    }

    /// Fewest null links over all chained linkages.
    pub fn min_cost(&mut self) -> Cost {
        let c = Rc::clone(&self.c);
        let n = self.n();
        let mut best = self.cost(0, n, NIL, NIL);
        for &d in &c.nil_left_nonempty[0] {
            best = best.min(self.cost(0, n, c.disjuncts[0][d as usize].1, NIL));
        }
        best
    }

    /// Number of chained linkages with exactly [`Engine::min_cost`] null links.
    pub fn count_min_cost(&mut self) -> Count {
        let target = self.min_cost();
        if !target.is_finite() {
            return 0;
        }
        let c = Rc::clone(&self.c);
        let n = self.n();
        let mut total = 0;
        if self.cost(0, n, NIL, NIL) == target {
            total = self.min_count(0, n, NIL, NIL);
        }
        for &d in &c.nil_left_nonempty[0] {
            let rd = c.disjuncts[0][d as usize].1;
            if self.cost(0, n, rd, NIL) == target {
                total = total.saturating_add(self.min_count(0, n, rd, NIL));
            }
        }
        total
    }

    /// Legal linkages of the span with `l` and `r` still to be satisfied.
    fn count(&mut self, lw: usize, rw: usize, l: u32, r: u32) -> Count {
        self.counters.count += 1;
        if rw == lw + 1 {
            return (l == NIL && r == NIL) as Count;
        }
        if l == NIL && r == NIL {
            return 0;
        }
        memoized!(self, count, key(lw, rw, l, r), {
            let c = Rc::clone(&self.c);
            let mut total: Count = 0;
            for w in lw + 1..rw {
                for d in c.candidates(w, l, r) {
                    let (ld, rd) = c.disjuncts[w][d as usize];
                    let lc = if c.link_ok(l, ld, w - lw) {
                        self.count(lw, w, c.next(l), c.next(ld))
                    } else {
                        0
                    };
                    if l != NIL && lc == 0 {
                        continue;
                    }
                    let rc = if c.link_ok(rd, r, rw - w) {
                        self.count(w, rw, c.next(rd), c.next(r))
                    } else {
                        0
                    };
                    total = total.saturating_add(lc.saturating_mul(rc));
                    if lc > 0 {
                        total = total.saturating_add(lc.saturating_mul(self.count(w, rw, rd, r)));
                    }
                    if rc > 0 && l == NIL {
                        total = total.saturating_add(rc.saturating_mul(self.count(lw, w, NIL, ld)));
                    }
                }
            }
            total
        })
    }

    /// Chained linkages of the span, any number of null links.
    fn chained(&mut self, lw: usize, rw: usize, l: u32, r: u32) -> Count {
        self.counters.chained += 1;
        if rw == lw + 1 {
            return (l == NIL && r == NIL) as Count;
        }
        memoized!(self, chained, key(lw, rw, l, r), {
            let c = Rc::clone(&self.c);
            let mut total: Count = 0;
            if l == NIL && r == NIL {
                let next = lw + 1;
                total = self.chained(next, rw, NIL, NIL);
                for &d in &c.nil_left_nonempty[next] {
                    let rd = c.disjuncts[next][d as usize].1;
                    total = total.saturating_add(self.chained(next, rw, rd, NIL));
                }
            } else {
                for w in lw + 1..rw {
                    for d in c.candidates(w, l, r) {
                        let (ld, rd) = c.disjuncts[w][d as usize];
                        let lc = if c.link_ok(l, ld, w - lw) {
                            self.chained(lw, w, c.next(l), c.next(ld))
                        } else {
                            0
                        };
                        if l != NIL && lc == 0 {
                            continue;
                        }
                        let rc = if c.link_ok(rd, r, rw - w) {
                            self.chained(w, rw, c.next(rd), c.next(r))
                        } else {
                            0
                        };
                        total = total.saturating_add(lc.saturating_mul(rc));
                        if lc > 0 {
                            total = total.saturating_add(lc.saturating_mul(self.chained(w, rw, rd, r)));
                        }
                        if rc > 0 && l == NIL {
                            total = total.saturating_add(rc.saturating_mul(self.chained(lw, w, NIL, ld)));
                        }
                    }
                }
            }
            total
        })
    }

    /// Fewest null links in a chained linkage of the span.
    fn cost(&mut self, lw: usize, rw: usize, l: u32, r: u32) -> Cost {
        self.counters.cost += 1;
        if rw == lw + 1 {
            return if l == NIL && r == NIL {
                Cost::ZERO
            } else {
                Cost::INFINITE
            };
        }
        if self.count(lw, rw, l, r) > 0 {
            return Cost::ZERO;
        }
        memoized!(self, cost, key(lw, rw, l, r), {
            let c = Rc::clone(&self.c);
            let mut best = Cost::INFINITE;
            if l == NIL && r == NIL {
                let next = lw + 1;
                best = self.cost(next, rw, NIL, NIL).succ();
                for &d in &c.nil_left_nonempty[next] {
                    let rd = c.disjuncts[next][d as usize].1;
                    best = best.min(self.cost(next, rw, rd, NIL).succ());
                }
            } else {
                for w in lw + 1..rw {
                    for d in c.candidates(w, l, r) {
                        let (ld, rd) = c.disjuncts[w][d as usize];
                        let lc = if c.link_ok(l, ld, w - lw) {
                            self.cost(lw, w, c.next(l), c.next(ld))
                        } else {
                            Cost::INFINITE
                        };
                        if l != NIL && !lc.is_finite() {
                            continue;
                        }
                        let rc = if c.link_ok(rd, r, rw - w) {
                            self.cost(w, rw, c.next(rd), c.next(r))
                        } else {
                            Cost::INFINITE
                        };
                        best = best.min(lc.plus(rc));
                        if lc.is_finite() {
                            best = best.min(lc.plus(self.cost(w, rw, rd, r)));
                        }
                        if rc.is_finite() && l == NIL {
                            best = best.min(rc.plus(self.cost(lw, w, NIL, ld)));
                        }
                    }
                }
            }
            best
        })
    }

    /// Chained linkages of the span attaining its minimum cost.
    fn min_count(&mut self, lw: usize, rw: usize, l: u32, r: u32) -> Count {
        self.counters.min_cost_count += 1;
        let target = self.cost(lw, rw, l, r);
        if !target.is_finite() {
            return 0;
        }
        if target == Cost::ZERO {
            return self.count(lw, rw, l, r);
        }
        memoized!(self, min_cost_count, key(lw, rw, l, r), {
            let c = Rc::clone(&self.c);
            let mut total: Count = 0;
            if l == NIL && r == NIL {
                let next = lw + 1;
                if self.cost(next, rw, NIL, NIL).succ() == target {
                    total = self.min_count(next, rw, NIL, NIL);
                }
                for &d in &c.nil_left_nonempty[next] {
                    let rd = c.disjuncts[next][d as usize].1;
                    if self.cost(next, rw, rd, NIL).succ() == target {
                        total = total.saturating_add(self.min_count(next, rw, rd, NIL));
                    }
                }
            } else {
                for w in lw + 1..rw {
                    for d in c.candidates(w, l, r) {
                        let (ld, rd) = c.disjuncts[w][d as usize];
                        let (ll, lr) = (c.next(l), c.next(ld));
                        let (rl, rr) = (c.next(rd), c.next(r));
                        let lc = if c.link_ok(l, ld, w - lw) {
                            self.cost(lw, w, ll, lr)
                        } else {
                            Cost::INFINITE
                        };
                        if l != NIL && !lc.is_finite() {
                            continue;
                        }
                        let rc = if c.link_ok(rd, r, rw - w) {
                            self.cost(w, rw, rl, rr)
                        } else {
                            Cost::INFINITE
                        };
                        if lc.plus(rc) == target {
                            let n = self
                                .min_count(lw, w, ll, lr)
                                .saturating_mul(self.min_count(w, rw, rl, rr));
                            total = total.saturating_add(n);
                        }
                        if lc.is_finite() && lc.plus(self.cost(w, rw, rd, r)) == target {
                            let n = self
                                .min_count(lw, w, ll, lr)
                                .saturating_mul(self.min_count(w, rw, rd, r));
                            total = total.saturating_add(n);
                        }
                        if rc.is_finite() && l == NIL && rc.plus(self.cost(lw, w, NIL, ld)) == target {
                            let n = self
                                .min_count(w, rw, rl, rr)
                                .saturating_mul(self.min_count(lw, w, NIL, ld));
                            total = total.saturating_add(n);
                        }
                    }
                }
            }
            total
        })
    }
}

/// Runs pass 1 and, only when the sentence has no legal linkage, passes 2
/// and 3 on the same memo.
pub fn parse(index: &FastMatchIndex, opts: EngineOptions) -> Result<ParseResult, ParseError> {
    Engine::new(index, opts)?.run()
}

pub fn count_grammatical(index: &FastMatchIndex) -> Result<Count, ParseError> {
    let mut e = Engine::new(index, EngineOptions::default())?;
    let n = e.count_grammatical();
    e.check_limit().map(|_| n)
}

pub fn count_chained(index: &FastMatchIndex) -> Result<Count, ParseError> {
    let mut e = Engine::new(index, EngineOptions::default())?;
    let n = e.count_chained();
    e.check_limit().map(|_| n)
}

pub fn min_cost(index: &FastMatchIndex) -> Result<Cost, ParseError> {
    let mut e = Engine::new(index, EngineOptions::default())?;
    let c = e.min_cost();
    e.check_limit().map(|_| c)
}

pub fn count_min_cost(index: &FastMatchIndex) -> Result<Count, ParseError> {
    let mut e = Engine::new(index, EngineOptions::default())?;
    let n = e.count_min_cost();
    e.check_limit().map(|_| n)
}
