//! Random dictionaries, formulas and sentences for tests.

use linkgram::{ConnectorName, Dictionary, Direction, Disjunct, DisjunctTable, ExpressionTree};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of generated grammars.
#[derive(Clone, Debug)]
pub struct GrammarConfig {
    pub heads: Vec<&'static str>,
    pub tails: Vec<&'static str>,
    pub vocabulary: usize,
    pub max_depth: usize,
    pub max_disjuncts: usize,
    pub max_side: usize,
    /// Chance that a word is left undefined.
    pub undefined: f64,
    pub unknown_entry: bool,
}

impl Default for GrammarConfig {
    fn default() -> Self {
        GrammarConfig {
            heads: vec!["A", "B", "C", "D"],
            tails: vec!["", "", "", "s", "p", "*"],
            vocabulary: 10,
            max_depth: 3,
            max_disjuncts: 12,
            max_side: 3,
            undefined: 0.0,
            unknown_entry: false,
        }
    }
}

pub fn random_name(rng: &mut impl Rng, cfg: &GrammarConfig) -> ConnectorName {
    let head = cfg.heads.choose(rng).unwrap();
    let tail = cfg.tails.choose(rng).unwrap();
    ConnectorName::new(head, tail).unwrap()
}

fn random_leaf(rng: &mut impl Rng, cfg: &GrammarConfig) -> ExpressionTree {
    let dir = if rng.gen_bool(0.5) {
        Direction::Left
    } else {
        Direction::Right
    };
    ExpressionTree::leaf(random_name(rng, cfg), dir)
}

pub fn random_formula(rng: &mut impl Rng, cfg: &GrammarConfig, depth: usize) -> ExpressionTree {
    if depth == 0 {
        return random_leaf(rng, cfg);
    }
    match rng.gen_range(0..10) {
        0..=2 => random_leaf(rng, cfg),
        3 => ExpressionTree::Empty,
        4 => ExpressionTree::optional(random_formula(rng, cfg, depth - 1)),
        5..=7 => {
            let k = rng.gen_range(2..=3);
            ExpressionTree::And((0..k).map(|_| random_formula(rng, cfg, depth - 1)).collect())
        }
        _ => {
            let k = rng.gen_range(2..=3);
            ExpressionTree::Or((0..k).map(|_| random_formula(rng, cfg, depth - 1)).collect())
        }
    }
}

fn small_enough(tree: &ExpressionTree, cfg: &GrammarConfig) -> bool {
    let ds = tree.expand();
    ds.len() <= cfg.max_disjuncts
        && ds
            .iter()
            .all(|d| d.left.len() <= cfg.max_side && d.right.len() <= cfg.max_side)
}

/// A formula whose expansion stays within the configured size.
pub fn bounded_formula(rng: &mut impl Rng, cfg: &GrammarConfig) -> ExpressionTree {
    loop {
        let t = random_formula(rng, cfg, cfg.max_depth);
        if small_enough(&t, cfg) {
            return t;
        }
    }
}

pub fn random_dictionary(rng: &mut impl Rng, cfg: &GrammarConfig) -> Dictionary {
    let mut entries: Vec<(String, ExpressionTree)> = Vec::new();
    for i in 0..cfg.vocabulary {
        if !rng.gen_bool(cfg.undefined) {
            entries.push((format!("w{i}"), bounded_formula(rng, cfg)));
        }
    }
    if cfg.unknown_entry {
        entries.push((linkgram::dictionary::UNKNOWN_WORD.to_owned(), bounded_formula(rng, cfg)));
    }
    Dictionary::from_entries(entries)
}

/// A dictionary and a sentence over its vocabulary.
#[derive(Clone, Debug)]
pub struct Instance {
    pub dict: Dictionary,
    pub words: Vec<String>,
}

impl Instance {
    /// The sentence's unpruned disjunct table.
    pub fn table(&self) -> DisjunctTable {
        let opts = linkgram::PrepareOptions {
            prune: false,
            ..Default::default()
        };
        linkgram::prepare(&self.dict, &self.words, &opts).table().clone()
    }
}

pub fn random_sentence(rng: &mut impl Rng, cfg: &GrammarConfig, len: usize) -> Vec<String> {
    (0..len)
        .map(|_| format!("w{}", rng.gen_range(0..cfg.vocabulary)))
        .collect()
}

pub fn random_instance(rng: &mut impl Rng, cfg: &GrammarConfig, min_words: usize, max_words: usize) -> Instance {
    let dict = random_dictionary(rng, cfg);
    let len = rng.gen_range(min_words..=max_words);
    let words = random_sentence(rng, cfg, len);
    Instance { dict, words }
}

/// A table of random disjuncts, bypassing formulas.
pub fn random_table(rng: &mut impl Rng, cfg: &GrammarConfig, words: usize, max_per_word: usize) -> DisjunctTable {
    DisjunctTable::new(
        (0..words)
            .map(|_| {
                let k = rng.gen_range(0..=max_per_word);
                let mut ds: Vec<Disjunct> = Vec::new();
                for _ in 0..k {
                    let nl = rng.gen_range(0..=cfg.max_side.min(2));
                    let nr = rng.gen_range(0..=cfg.max_side.min(2));
                    let d = Disjunct::new(
                        (0..nl).map(|_| random_name(rng, cfg)).collect(),
                        (0..nr).map(|_| random_name(rng, cfg)).collect(),
                    );
                    if !ds.contains(&d) {
                        ds.push(d);
                    }
                }
                ds
            })
            .collect(),
    )
}

/// Brute-force expansion: every way of picking one child at each `or` node
/// that is reached, collected without deduplication.
pub fn or_assignments(tree: &ExpressionTree) -> Vec<Disjunct> {
    fn go(t: &ExpressionTree) -> Vec<Vec<(Direction, ConnectorName)>> {
        match t {
            ExpressionTree::Empty => vec![vec![]],
            ExpressionTree::Leaf(c) => vec![vec![(c.direction, c.name.clone())]],
            ExpressionTree::Or(cs) => cs.iter().flat_map(go).collect(),
            ExpressionTree::And(cs) => cs.iter().fold(vec![vec![]], |acc, c| {
                let opts = go(c);
                acc.iter()
                    .flat_map(|a| {
                        opts.iter().map(move |b| {
                            let mut v = a.clone();
                            v.extend(b.iter().cloned());
                            v
                        })
                    })
                    .collect()
            }),
        }
    }
    go(tree)
        .into_iter()
        .map(|seq| {
            let mut d = Disjunct::default();
            for (dir, name) in seq {
                match dir {
                    Direction::Left => d.left.push(name),
                    Direction::Right => d.right.push(name),
                }
            }
            d
        })
        .collect()
}
