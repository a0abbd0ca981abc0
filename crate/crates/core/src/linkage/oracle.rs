//! Exhaustive search over planar link sets, used as ground truth for the
//! engine. Shares nothing with the engine beyond the data types.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use super::{is_canonical, validate_linkage, Link, LinkLabel, Linkage, WordChoice};
use crate::dictionary::{ConnectorName, Disjunct};
use crate::error::OracleError;
use crate::pruning::DisjunctTable;

pub const ORACLE_MAX_WORDS: usize = 8;

/// Linkages kept in the report only up to this many.
const LIST_CAP: usize = 50_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub legal_count: u128,
    /// Linkages of the form the engine counts, by number of null links.
    pub histogram: BTreeMap<usize, u128>,
    /// Every chained linkage, by number of null links. Words without real
    /// links are represented once, as isolated.
    pub all_chained: BTreeMap<usize, u128>,
    /// The linkages behind `histogram`, sorted; `None` above the list cap.
    pub linkages: Option<Vec<Linkage>>,
}

impl OracleReport {
    pub fn min_cost(&self) -> Option<usize> {
        self.histogram.keys().next().copied()
    }

    pub fn min_cost_count(&self) -> u128 {
        self.histogram.values().next().copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.histogram.values().sum()
    }
}

type Graph = Vec<(usize, usize)>;

fn graphs(n: usize) -> std::sync::Arc<Vec<Graph>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, std::sync::Arc<Vec<Graph>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().unwrap().get(&n) {
        return g.clone();
    }
    let g = std::sync::Arc::new(connected_noncrossing(n));
    cache.lock().unwrap().insert(n, g.clone());
    g
}

fn connected_noncrossing(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(i: usize, pairs: &[(usize, usize)], chosen: &mut Graph, n: usize, out: &mut Vec<Graph>) {
        if i == pairs.len() {
            if is_connected(n, chosen) {
                out.push(chosen.clone());
            }
            return;
        }
        rec(i + 1, pairs, chosen, n, out);
        let (a, b) = pairs[i];
        if chosen
            .iter()
            .all(|&(c, d)| !(a < c && c < b && b < d) && !(c < a && a < d && d < b))
        {
            chosen.push((a, b));
            rec(i + 1, pairs, chosen, n, out);
            chosen.pop();
        }
    }
    rec(0, &pairs, &mut chosen, n, &mut out);
    out
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut parts = n;
    for &(a, b) in edges {
        let (x, y) = (find(&mut parent, a), find(&mut parent, b));
        if x != y {
            parent[x] = y;
            parts -= 1;
        }
    }
    parts <= 1
}

/// Every chained linkage of a sentence of at most `max_words` (≤ 8) words,
/// found by trying all connected planar link sets, all ways of marking
/// neighbour links as null, and all disjunct choices that fit.
pub fn brute_force_oracle(table: &DisjunctTable, max_words: usize) -> Result<OracleReport, OracleError> {
    let cap = max_words.min(ORACLE_MAX_WORDS);
    let n = table.len();
    if n > cap {
        return Err(OracleError::TooManyWords { words: n, cap });
    }
    let mut report = OracleReport::default();
    if n == 0 {
        return Ok(report);
    }
    let mut kept = Vec::new();
    for g in graphs(n).iter() {
        let adjacent: Vec<usize> = (0..g.len()).filter(|&i| g[i].1 == g[i].0 + 1).collect();
        for mask in 0u32..(1 << adjacent.len()) {
            let is_null = |i: usize| {
                adjacent
                    .iter()
                    .position(|&a| a == i)
                    .is_some_and(|p| mask >> p & 1 == 1)
            };
            let real: Vec<(usize, usize)> = (0..g.len()).filter(|&i| !is_null(i)).map(|i| g[i]).collect();
            let nulls: Vec<usize> = (0..g.len()).filter(|&i| is_null(i)).map(|i| g[i].0).collect();
            for_each_assignment(table, &real, &mut |choices, labels| {
                let mut links: Vec<Link> = real
                    .iter()
                    .zip(labels)
                    .map(|(&(a, b), lab)| Link::new(a, b, LinkLabel::Connector(lab.clone())))
                    .collect();
                links.extend(nulls.iter().map(|&x| Link::null(x)));
                let lk = Linkage::new(links, choices.to_vec());
                debug_assert_eq!(validate_linkage(&lk, table), Ok(()));
                if validate_linkage(&lk, table).is_err() {
                    return;
                }
                let cost = nulls.len();
                if cost == 0 && n > 1 {
                    report.legal_count += 1;
                }
                *report.all_chained.entry(cost).or_default() += 1;
                if is_canonical(&lk, table) {
                    *report.histogram.entry(cost).or_default() += 1;
                    if kept.len() <= LIST_CAP {
                        kept.push(lk);
                    }
                }
            });
        }
    }
    if n == 1 && table.word(0).iter().any(Disjunct::is_empty) {
        report.legal_count = 1;
    }
    if kept.len() <= LIST_CAP {
        kept.sort();
        report.linkages = Some(kept);
    }
    Ok(report)
}

/// Calls `f` for every choice of disjuncts (or isolation, for words without
/// real links) under which the real links pair matching connectors.
fn for_each_assignment(
    table: &DisjunctTable,
    real: &[(usize, usize)],
    f: &mut dyn FnMut(&[WordChoice], &[ConnectorName]),
) {
    let n = table.len();
    let mut lefts: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut rights: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in real {
        rights[a].push(b);
        lefts[b].push(a);
    }
    for w in 0..n {
        lefts[w].sort_unstable_by(|a, b| b.cmp(a));
        rights[w].sort_unstable();
    }
    let options: Vec<Vec<WordChoice>> = (0..n)
        .map(|w| {
            if lefts[w].is_empty() && rights[w].is_empty() {
                return vec![WordChoice::Isolated];
            }
            table
                .word(w)
                .iter()
                .enumerate()
                .filter(|(_, d)| d.left.len() == lefts[w].len() && d.right.len() == rights[w].len())
                .map(|(i, _)| WordChoice::Disjunct(i))
                .collect()
        })
        .collect();
    let mut choices = vec![WordChoice::Isolated; n];
    assign(0, table, real, &lefts, &rights, &options, &mut choices, f);
}

#[allow(clippy::too_many_arguments)]
fn assign(
    w: usize,
    table: &DisjunctTable,
    real: &[(usize, usize)],
    lefts: &[Vec<usize>],
    rights: &[Vec<usize>],
    options: &[Vec<WordChoice>],
    choices: &mut Vec<WordChoice>,
    f: &mut dyn FnMut(&[WordChoice], &[ConnectorName]),
) {
    let n = table.len();
    if w == n {
        let labels: Vec<ConnectorName> = real
            .iter()
            .map(|&(a, b)| {
                let (x, y) = connector_pair(table, choices, lefts, rights, a, b);
                x.link_label(y)
            })
            .collect();
        f(choices, &labels);
        return;
    }
    for &opt in &options[w] {
        choices[w] = opt;
        // every link back to an earlier word must pair matching connectors
        let ok = lefts[w].iter().all(|&v| {
            let (x, y) = connector_pair(table, choices, lefts, rights, v, w);
            x.matches(y)
        });
        if ok {
            assign(w + 1, table, real, lefts, rights, options, choices, f);
        }
    }
}

fn connector_pair<'t>(
    table: &'t DisjunctTable,
    choices: &[WordChoice],
    lefts: &[Vec<usize>],
    rights: &[Vec<usize>],
    a: usize,
    b: usize,
) -> (&'t ConnectorName, &'t ConnectorName) {
    let (WordChoice::Disjunct(da), WordChoice::Disjunct(db)) = (choices[a], choices[b]) else {
        unreachable!("linked words always carry a disjunct");
    };
    let j = rights[a].iter().position(|&v| v == b).unwrap();
    let k = lefts[b].iter().position(|&v| v == a).unwrap();
    (&table.word(a)[da].right[j], &table.word(b)[db].left[k])
}

/// Legal linkages of the NL-extended table `ext` (see
/// [`DisjunctTable::extended`]), counted by the plain span recursion with
/// null links restricted so that each chained linkage is counted once: an
/// `NL` link joins neighbours only, is made from the left end of a span and
/// only once the right end has nothing left to satisfy; until then a pending
/// lone `NL` on the left is carried into the span's left part.
pub fn count_extended_legal(ext: &DisjunctTable) -> u128 {
    let mut memo = HashMap::new();
    let n = ext.len();
    let mut total = 0u128;
    for (i, d) in ext.word(0).iter().enumerate() {
        if d.left.is_empty() {
            let r = List::right(0, i, d);
            total += ext_count(ext, &mut memo, 0, n, r, List::NIL);
        }
    }
    total
}

/// The unconsumed part of a connector list: the `len` nearest connectors of
/// one side of disjunct `d` of word `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct List {
    w: usize,
    d: usize,
    right: bool,
    len: usize,
}

impl List {
    const NIL: List = List {
        w: 0,
        d: 0,
        right: false,
        len: 0,
    };

    fn right(w: usize, d: usize, dj: &Disjunct) -> List {
        List::of(w, d, true, dj.right.len())
    }

    fn left(w: usize, d: usize, dj: &Disjunct) -> List {
        List::of(w, d, false, dj.left.len())
    }

    fn of(w: usize, d: usize, right: bool, len: usize) -> List {
        if len == 0 {
            List::NIL
        } else {
            List { w, d, right, len }
        }
    }

    fn is_nil(self) -> bool {
        self.len == 0
    }

    fn head(self, ext: &DisjunctTable) -> &ConnectorName {
        let dj = &ext.word(self.w)[self.d];
        let list = if self.right { &dj.right } else { &dj.left };
        &list[self.len - 1]
    }

    fn rest(self) -> List {
        List::of(self.w, self.d, self.right, self.len - 1)
    }
}

fn ext_count(
    ext: &DisjunctTable,
    memo: &mut HashMap<(usize, usize, List, List), u128>,
    lw: usize,
    rw: usize,
    l: List,
    r: List,
) -> u128 {
    if rw == lw + 1 {
        return (l.is_nil() && r.is_nil()) as u128;
    }
    let deferred = l.len == 1 && l.head(ext).is_null_link() && !r.is_nil();
    let eff_l = if deferred { List::NIL } else { l };
    if eff_l.is_nil() && r.is_nil() {
        return 0;
    }
    if let Some(&v) = memo.get(&(lw, rw, l, r)) {
        return v;
    }
    let mut total = 0u128;
    for w in lw + 1..rw {
        for (i, d) in ext.word(w).iter().enumerate() {
            let ld = List::left(w, i, d);
            let rd = List::right(w, i, d);
            let lc = if !eff_l.is_nil() && !ld.is_nil() && eff_l.head(ext).matches(ld.head(ext)) {
                let nl = eff_l.head(ext).is_null_link();
                if !nl || (w == lw + 1 && r.is_nil()) {
                    ext_count(ext, memo, lw, w, eff_l.rest(), ld.rest())
                } else {
                    0
                }
            } else {
                0
            };
            let rc = if !r.is_nil() && !rd.is_nil() && !r.head(ext).is_null_link() && rd.head(ext).matches(r.head(ext))
            {
                ext_count(ext, memo, w, rw, rd.rest(), r.rest())
            } else {
                0
            };
            total += lc * rc;
            if lc > 0 {
                total += lc * ext_count(ext, memo, w, rw, rd, r);
            }
            if rc > 0 && eff_l.is_nil() {
                let carried = if deferred { l } else { List::NIL };
                total += rc * ext_count(ext, memo, lw, w, carried, ld);
            }
        }
    }
    memo.insert((lw, rw, l, r), total);
    total
}
