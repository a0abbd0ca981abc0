use linkgram::linkage::{count_extended_legal, is_canonical};
use linkgram::sentence::prepare_table;
use linkgram::{
    brute_force_oracle, enumerate_linkages, validate_linkage, DisjunctTable, Engine, EngineOptions, PrepareOptions,
};
use linkgram_testkit::{random_instance, random_table, rng, GrammarConfig};

fn engine(table: &DisjunctTable, prune: bool) -> Engine {
    let opts = PrepareOptions {
        prune,
        ..Default::default()
    };
    let (index, _) = prepare_table(table.clone(), &opts);
    Engine::new(&index, EngineOptions::default()).unwrap()
}

fn check(table: &DisjunctTable, label: &str) {
    let report = brute_force_oracle(table, 8).unwrap();
    let mut e = engine(table, true);
    assert_eq!(e.count_grammatical(), report.legal_count, "{label}: legal count");
    let min = e.min_cost().value().map(|c| c as usize);
    assert_eq!(min, report.min_cost(), "{label}: min cost");
    // the canonical form loses nothing at the minimum
    assert_eq!(report.all_chained.keys().next().copied(), report.min_cost(), "{label}");
    assert_eq!(e.count_min_cost(), report.min_cost_count(), "{label}: min-cost count");
    assert_eq!(e.count_chained(), report.total(), "{label}: chained count");

    let (lks, truncated) = enumerate_linkages(&mut e, 100_000);
    assert!(!truncated);
    let mut lks: Vec<_> = lks
        .iter()
        .map(|lk| {
            assert_eq!(validate_linkage(lk, e.table()), Ok(()), "{label}: {lk:?}");
            lk.reindex(e.table(), table).unwrap()
        })
        .collect();
    for lk in &lks {
        assert_eq!(validate_linkage(lk, table), Ok(()), "{label}: {lk:?}");
        assert!(is_canonical(lk, table));
    }
    lks.sort();
    let n = lks.len();
    lks.dedup();
    assert_eq!(lks.len(), n, "{label}: duplicates");
    let min = report.min_cost();
    let expected: Vec<_> = report
        .linkages
        .unwrap()
        .into_iter()
        .filter(|l| Some(l.cost()) == min)
        .collect();
    // the engine hands back isolated words for its canonical representatives
    assert_eq!(lks, expected, "{label}: enumerated set");
}

#[test]
fn random_formula_instances() {
    let cfg = GrammarConfig::default();
    for seed in 0..300 {
        let mut r = rng(seed);
        let inst = random_instance(&mut r, &cfg, 1, 6);
        check(&inst.table(), &format!("seed {seed} {:?}", inst.words));
    }
}

#[test]
fn random_tables() {
    let cfg = GrammarConfig::default();
    for seed in 0..300 {
        let mut r = rng(1000 + seed);
        let n = 1 + seed as usize % 6;
        let t = random_table(&mut r, &cfg, n, 4);
        check(&t, &format!("table seed {seed}"));
    }
}

#[test]
fn extended_grammar_agrees() {
    let cfg = GrammarConfig::default();
    for seed in 0..300 {
        let mut r = rng(5000 + seed);
        let inst = random_instance(&mut r, &cfg, 2, 6);
        let t = inst.table();
        assert_eq!(
            engine(&t, false).count_chained(),
            count_extended_legal(&t.extended()),
            "seed {seed}"
        );
    }
}
