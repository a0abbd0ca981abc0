use linkgram::pruning::build_fast_match;
use linkgram::sentence::prepare_table;
use linkgram::{
    brute_force_oracle, desk_dictionary, parse, parse_dictionary, parse_tokens, prepare, Disjunct, DisjunctTable,
    Engine, EngineOptions, ParseError, ParseOptions, PrepareOptions,
};
use linkgram_testkit::{random_instance, random_table, rng, GrammarConfig};

fn name(s: &str) -> linkgram::ConnectorName {
    s.parse().unwrap()
}

fn triple(dict_src: &str, words: &[&str]) -> (u128, u32, u128) {
    let dict = parse_dictionary(dict_src).unwrap();
    let r = parse_tokens(&dict, words, &ParseOptions::default()).unwrap();
    (r.grammatical_count, r.min_cost, r.min_cost_count)
}

#[test]
fn small_sentences() {
    assert_eq!(triple("w: ();", &["w"]), (1, 0, 1));
    assert_eq!(triple("a: S+; b: S-;", &["a", "b"]), (1, 0, 1));
    assert_eq!(triple("a: () or A+; b: ();", &["a", "b"]), (0, 1, 1));
    assert_eq!(triple("w: ();", &["w", "w", "w", "w", "w"]), (0, 4, 1));
}

#[test]
fn desk_sentences() {
    let dict = desk_dictionary();
    let run = |s: &str| {
        let words: Vec<&str> = s.split_whitespace().collect();
        let r = parse_tokens(&dict, &words, &ParseOptions::default()).unwrap();
        (r.grammatical_count, r.min_cost, r.min_cost_count)
    };
    assert_eq!(run("mary liked the movie"), (1, 0, 1));
    assert_eq!(run("mary liked the movie too"), (0, 1, 1));
    let table = prepare(
        &dict,
        &["mary", "liked", "the", "movie", "too"],
        &PrepareOptions {
            prune: false,
            ..Default::default()
        },
    )
    .table()
    .clone();
    let report = brute_force_oracle(&table, 8).unwrap();
    assert_eq!(report.min_cost(), Some(1));
    assert_eq!(report.all_chained.keys().next(), Some(&1));
}

#[test]
fn single_word_without_a_usable_disjunct() {
    // one isolated word: no legal linkage, yet nothing to pay for
    assert_eq!(triple("w: A+;", &["w"]), (0, 0, 1));
    assert_eq!(triple("w: A+;", &["zzz"]), (0, 0, 1));
}

#[test]
fn grammatical_input_runs_one_pass() {
    let dict = desk_dictionary();
    let r = parse_tokens(&dict, &["mary", "liked", "the", "movie"], &ParseOptions::default()).unwrap();
    assert!(r.counters.count > 0);
    assert_eq!(
        (r.counters.cost, r.counters.min_cost_count, r.counters.chained),
        (0, 0, 0)
    );
    let r = parse_tokens(
        &dict,
        &["mary", "liked", "the", "movie", "too"],
        &ParseOptions::default(),
    )
    .unwrap();
    assert!(r.counters.cost > 0 && r.counters.min_cost_count > 0);
}

#[test]
fn memoization_changes_nothing_but_time() {
    let cfg = GrammarConfig::default();
    for seed in 0..100 {
        let inst = random_instance(&mut rng(seed), &cfg, 2, 7);
        let (index, _) = prepare_table(inst.table(), &PrepareOptions::default());
        let with = parse(&index, EngineOptions::default()).unwrap();
        let without = parse(
            &index,
            EngineOptions {
                memoize: false,
                ..Default::default()
            },
        )
        .unwrap();
        let again = parse(&index, EngineOptions::default()).unwrap();
        let key = |r: &linkgram::ParseResult| (r.grammatical_count, r.min_cost, r.min_cost_count);
        assert_eq!(key(&with), key(&without), "seed {seed}");
        assert_eq!(key(&with), key(&again));
        assert_eq!(with.counters, again.counters);
    }
}

#[test]
fn passes_are_repeatable_on_one_engine() {
    let cfg = GrammarConfig::default();
    for seed in 0..50 {
        let inst = random_instance(&mut rng(seed), &cfg, 2, 7);
        let mut e = Engine::new(&build_fast_match(inst.table()), EngineOptions::default()).unwrap();
        let first = (
            e.count_grammatical(),
            e.min_cost(),
            e.count_min_cost(),
            e.count_chained(),
        );
        let second = (
            e.count_grammatical(),
            e.min_cost(),
            e.count_min_cost(),
            e.count_chained(),
        );
        assert_eq!(first, second);
    }
}

#[test]
fn emptying_a_word_never_lowers_cost() {
    let cfg = GrammarConfig::default();
    for seed in 0..100 {
        let inst = random_instance(&mut rng(seed), &cfg, 2, 7);
        let t = inst.table();
        let cost = |t: DisjunctTable| parse(&build_fast_match(t), EngineOptions::default()).unwrap().min_cost;
        let base = cost(t.clone());
        for w in 0..t.len() {
            let mut words = t.clone().into_words();
            words[w].clear();
            assert!(base <= cost(DisjunctTable::new(words)), "seed {seed} word {w}");
        }
    }
}

#[test]
fn result_laws_on_random_six_word_sentences() {
    let cfg = GrammarConfig::default();
    for seed in 0..100u64 {
        let inst = random_instance(&mut rng(seed), &cfg, 6, 6);
        let prepared = prepare(&inst.dict, &inst.words, &PrepareOptions::default());
        let r = parse(&prepared.index, EngineOptions::default()).unwrap();
        assert_eq!(r.grammatical_count > 0, r.min_cost == 0, "seed {seed}");
        assert!(r.min_cost <= 5);
        assert!(r.min_cost_count > 0);
        if seed % 10 == 0 {
            let report = brute_force_oracle(&inst.table(), 8).unwrap();
            assert_eq!(report.min_cost(), Some(r.min_cost as usize));
            assert_eq!(report.min_cost_count(), r.min_cost_count);
        }
    }
}

#[test]
fn link_length_bound_is_enforced() {
    // only a length-2 link can join a and c
    assert_eq!(triple("a: S+; b: (); c: S-;", &["a", "b", "c"]), (0, 1, 1));
    let dict = parse_dictionary("a: S+; b: (); c: S-;").unwrap();
    let opts = ParseOptions {
        max_link_length: Some(1),
        ..Default::default()
    };
    let r = parse_tokens(&dict, &["a", "b", "c"], &opts).unwrap();
    assert_eq!((r.grammatical_count, r.min_cost, r.min_cost_count), (0, 2, 1));
}

#[test]
fn errors() {
    let t = DisjunctTable::new(vec![]);
    assert_eq!(
        Engine::new(&build_fast_match(t), EngineOptions::default()).err(),
        Some(ParseError::EmptySentence)
    );
    let t = DisjunctTable::new(vec![vec![Disjunct::default()]; 5]);
    let opts = EngineOptions {
        max_words: 4,
        ..Default::default()
    };
    assert!(matches!(
        parse(&build_fast_match(t.clone()), opts),
        Err(ParseError::TooManyWords { words: 5, limit: 4 })
    ));
    let opts = EngineOptions {
        max_memo_entries: 2,
        ..Default::default()
    };
    assert_eq!(
        parse(&build_fast_match(t), opts),
        Err(ParseError::ResourceLimit { limit: 2 })
    );
}

#[test]
fn huge_counts_do_not_overflow() {
    // every word links to every other word in many ways; counts explode
    let cfg = GrammarConfig {
        heads: vec!["A"],
        tails: vec![""],
        ..Default::default()
    };
    let t = random_table(&mut rng(1), &cfg, 30, 6);
    let mut words = t.into_words();
    for ds in &mut words {
        ds.push(Disjunct::new(vec![name("A")], vec![name("A")]));
        ds.push(Disjunct::new(vec![name("A"), name("A")], vec![name("A"), name("A")]));
    }
    words[0] = vec![Disjunct::new(vec![], vec![name("A"), name("A")])];
    let r = parse(&build_fast_match(DisjunctTable::new(words)), EngineOptions::default()).unwrap();
    assert!(r.grammatical_count > 0);
}
