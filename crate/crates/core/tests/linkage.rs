use linkgram::linkage::{ComponentKind, Link, LinkLabel};
use linkgram::pruning::build_fast_match;
use linkgram::{
    decompose_chained, enumerate_linkages, validate_linkage, Disjunct, DisjunctTable, Engine, EngineOptions, Linkage,
    WordChoice,
};
use linkgram_testkit::{random_instance, rng, GrammarConfig};

fn name(s: &str) -> linkgram::ConnectorName {
    s.parse().unwrap()
}

fn engine(t: &DisjunctTable) -> Engine {
    Engine::new(&build_fast_match(t.clone()), EngineOptions::default()).unwrap()
}

#[test]
fn forced_s_link() {
    let t = DisjunctTable::new(vec![
        vec![Disjunct::new(vec![], vec![name("S")])],
        vec![Disjunct::new(vec![name("Ss")], vec![])],
    ]);
    let (lks, truncated) = enumerate_linkages(&mut engine(&t), 10);
    assert!(!truncated);
    assert_eq!(lks.len(), 1);
    assert_eq!(lks[0].to_text(), "0 1 Ss\n");
    assert_eq!(lks[0].cost(), 0);
}

#[test]
fn forced_null_link() {
    let t = DisjunctTable::new(vec![vec![Disjunct::default()], vec![Disjunct::default()]]);
    let (lks, _) = enumerate_linkages(&mut engine(&t), 10);
    assert_eq!(lks.len(), 1);
    assert_eq!(lks[0].to_text(), "0 1 @NULL\n");
    assert_eq!(lks[0].choices, [WordChoice::Isolated, WordChoice::Isolated]);
}

#[test]
fn limit_is_flagged() {
    let t = DisjunctTable::new(vec![
        vec![
            Disjunct::new(vec![], vec![name("A")]),
            Disjunct::new(vec![], vec![name("B")]),
        ],
        vec![
            Disjunct::new(vec![name("A")], vec![]),
            Disjunct::new(vec![name("B")], vec![]),
        ],
    ]);
    let mut e = engine(&t);
    let (lks, truncated) = enumerate_linkages(&mut e, 1);
    assert_eq!((lks.len(), truncated), (1, true));
    let (lks, truncated) = enumerate_linkages(&mut e, 2);
    assert_eq!((lks.len(), truncated), (2, false));
    // enumeration order is stable
    assert_eq!(enumerate_linkages(&mut engine(&t), 2).0, lks);
}

#[test]
fn decomposition_of_a_single_legal_linkage() {
    let t = DisjunctTable::new(vec![
        vec![Disjunct::new(vec![], vec![name("S")])],
        vec![Disjunct::new(vec![name("S")], vec![])],
    ]);
    let (lks, _) = enumerate_linkages(&mut engine(&t), 10);
    let parts = decompose_chained(&lks[0]);
    assert_eq!(parts.len(), 1);
    assert_eq!(parts[0].kind, ComponentKind::Legal);
    assert_eq!(parts[0].words, [0, 1]);
}

#[test]
fn two_pieces_and_a_disconnected_word() {
    // a b | c | d e: two legal pieces joined through an unattachable word
    let t = DisjunctTable::new(vec![
        vec![Disjunct::new(vec![], vec![name("A")])],
        vec![Disjunct::new(vec![name("A")], vec![])],
        vec![Disjunct::new(vec![name("X")], vec![])],
        vec![Disjunct::new(vec![], vec![name("B")])],
        vec![Disjunct::new(vec![name("B")], vec![])],
    ]);
    let mut e = engine(&t);
    assert_eq!(e.min_cost().value(), Some(2));
    let (lks, _) = enumerate_linkages(&mut e, 10);
    assert_eq!(lks.len(), 1);
    let kinds: Vec<_> = decompose_chained(&lks[0]).iter().map(|c| c.kind).collect();
    assert_eq!(
        kinds,
        [ComponentKind::Legal, ComponentKind::IsolatedWord, ComponentKind::Legal]
    );
    assert_eq!(lks[0].to_text(), "0 1 A\n1 2 @NULL\n2 3 @NULL\n3 4 B\n");
}

#[test]
fn components_are_legal_or_isolated() {
    let cfg = GrammarConfig::default();
    for seed in 0..200 {
        let inst = random_instance(&mut rng(seed), &cfg, 2, 7);
        let t = inst.table();
        let mut e = engine(&t);
        let (lks, _) = enumerate_linkages(&mut e, 500);
        for lk in &lks {
            assert_eq!(validate_linkage(lk, &t), Ok(()));
            let parts = decompose_chained(lk);
            let mut covered: Vec<usize> = parts.iter().flat_map(|c| c.words.clone()).collect();
            covered.sort_unstable();
            assert_eq!(covered, (0..t.len()).collect::<Vec<_>>());
            for c in &parts {
                let (sub, sub_table) = c.restrict(lk, &t);
                match c.kind {
                    ComponentKind::IsolatedWord => assert_eq!(sub.links, []),
                    ComponentKind::Legal => {
                        assert_eq!(validate_linkage(&sub, &sub_table), Ok(()));
                        assert_eq!(sub.cost(), 0);
                    }
                }
            }
        }
    }
}

#[test]
fn serialization_is_sorted() {
    let lk = Linkage::new(
        vec![
            Link::new(2, 3, LinkLabel::Null),
            Link::new(0, 2, LinkLabel::Connector(name("Os"))),
            Link::new(0, 1, LinkLabel::Connector(name("D"))),
        ],
        vec![WordChoice::Isolated; 4],
    );
    assert_eq!(lk.to_text(), "0 1 D\n0 2 Os\n2 3 @NULL\n");
}
