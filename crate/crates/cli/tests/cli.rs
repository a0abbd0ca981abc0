use std::fs;
use std::path::{Path, PathBuf};

use linkgram::{
    brute_force_oracle, desk_dictionary, enumerate_linkages, prepare, Engine, EngineOptions, PrepareOptions,
};
use linkgram_cli::{
    app, layout, normalize, render_ascii, run_batch, BatchStats, CorpusOptions, MergeList, NormalizeOptions, Outcome,
};
use linkgram_testkit::{random_instance, rng, GrammarConfig};
use proptest::prelude::*;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(name)
}

fn toy() -> (String, MergeList) {
    let corpus = fs::read_to_string(data("data/toy_corpus.txt")).unwrap();
    let merges = MergeList::parse(&fs::read_to_string(data("data/merges.txt")).unwrap()).unwrap();
    (corpus, merges)
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = app::run(std::iter::once("parse").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn normalization_examples() {
    let none = MergeList::new();
    let opts = NormalizeOptions::default();
    assert_eq!(
        normalize("Mary liked the movie.", &opts, &none),
        ["mary", "liked", "the", "movie"]
    );
    assert!(normalize("", &opts, &none).is_empty());
    let mut merges = MergeList::new();
    merges.insert(&["you", "know"]);
    assert_eq!(normalize("you know it", &opts, &merges), ["you_know", "it"]);
}

#[test]
fn short_lines_are_all_skipped() {
    let report = run_batch(
        "a b c\nthe dog ran\n\n",
        &desk_dictionary(),
        &MergeList::new(),
        &CorpusOptions::default(),
    )
    .unwrap();
    let s = &report.stats;
    assert_eq!(
        (s.sentences_skipped, s.sentences_not_skipped, s.words_skipped),
        (2, 0, 6)
    );
    assert_eq!(s.average_linkages(), None);
    assert_eq!(s.average_null_links(), None);
    let table = s.render(true);
    assert!(
        table
            .lines()
            .any(|l| l.contains("# grammatical") && l.ends_with(" 0 (n/a)")),
        "{table}"
    );
    assert_eq!(table.lines().filter(|l| l.contains("n/a")).count(), 5, "{table}");
}

#[test]
fn grammatical_corpus() {
    let corpus = "Mary liked the movie.\nThe big dog ran quickly.\nWe have seen the house.\n";
    let report = run_batch(corpus, &desk_dictionary(), &MergeList::new(), &CorpusOptions::default()).unwrap();
    let s = &report.stats;
    assert_eq!(s.grammatical, 3);
    assert_eq!(s.average_null_links(), Some(0.0));
    let table = s.render(true);
    assert!(table.contains("3 (100%)"));
    assert!(
        table
            .lines()
            .any(|l| l.contains("Average # of null links") && l.ends_with(" 0.00")),
        "{table}"
    );
}

#[test]
fn toy_corpus_agrees_with_the_oracle() {
    let (corpus, merges) = toy();
    let dict = desk_dictionary();
    let report = run_batch(&corpus, &dict, &merges, &CorpusOptions::default()).unwrap();
    assert_eq!(BatchStats::from_records(&report.records), report.stats);
    let mut checked = 0;
    for r in &report.records {
        let Outcome::Parsed(p) = &r.outcome else { continue };
        assert_eq!(p.grammatical_count > 0, p.min_cost == 0);
        let unpruned = prepare(
            &dict,
            &r.words,
            &PrepareOptions {
                prune: false,
                ..Default::default()
            },
        );
        if r.words.len() <= 8 {
            let o = brute_force_oracle(unpruned.table(), 8).unwrap();
            assert_eq!(
                (o.legal_count, o.min_cost(), o.min_cost_count()),
                (p.grammatical_count, Some(p.min_cost as usize), p.min_cost_count),
                "{:?}",
                r.words
            );
            checked += 1;
        } else {
            let mut e = Engine::new(&unpruned.index, EngineOptions::default()).unwrap();
            let x = e.run().unwrap();
            assert_eq!(
                (x.grammatical_count, x.min_cost, x.min_cost_count),
                (p.grammatical_count, p.min_cost, p.min_cost_count)
            );
        }
    }
    assert!(checked >= 10);
}

#[test]
fn records_follow_corpus_order() {
    let (corpus, merges) = toy();
    let report = run_batch(&corpus, &desk_dictionary(), &merges, &CorpusOptions::default()).unwrap();
    let keys: Vec<_> = report.records.iter().map(|r| (r.utterance, r.piece)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(report.records.last().unwrap().utterance, 19);
    // the long line is cut into 25 words and a skipped remainder
    let long: Vec<_> = report.records.iter().filter(|r| r.utterance == 14).collect();
    assert_eq!(
        long.iter().map(|r| (r.tokens, r.is_skipped())).collect::<Vec<_>>(),
        [(25, false), (2, true)]
    );
}

#[test]
fn output_streams_and_exit_codes() {
    let corpus = data("data/toy_corpus.txt");
    let corpus = corpus.to_str().unwrap();
    let (code, out, err) = cli(&["--batch", corpus, "--mask-timings"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("[1.1] mary liked the movie\n"));
    assert!(err.starts_with("sentences # not skipped"));

    let dir = tempfile::tempdir().unwrap();
    let stats = dir.path().join("stats.txt");
    let (code, _, err) = cli(&["--batch", corpus, "--stats-out", stats.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(err.is_empty());
    assert!(fs::read_to_string(&stats).unwrap().starts_with("sentences"));

    let bad = dir.path().join("bad.dict");
    fs::write(&bad, "a: S+\n").unwrap();
    assert_eq!(cli(&["--dict", bad.to_str().unwrap(), "a", "b"]).0, 1);
    assert_eq!(cli(&["--dict", "/nonexistent/x.dict", "a"]).0, 2);
    assert_eq!(cli(&["--batch", "/nonexistent/corpus.txt"]).0, 2);
    assert_eq!(cli(&["--no-such-flag"]).0, 1);
    assert_eq!(cli(&[]).0, 1);
    assert_eq!(cli(&["--min-words", "0", "a"]).0, 1);
    assert_eq!(cli(&["--wall", "a"]).0, 1);
    assert_eq!(cli(&["--batch", corpus, "mary"]).0, 1);
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("--merge-list"));
}

#[test]
fn wall_with_a_dictionary_that_has_one() {
    let dir = tempfile::tempdir().unwrap();
    let dict = dir.path().join("w.dict");
    fs::write(&dict, "LEFT-WALL: W+;\nmary: W- & S+;\nran: S-;\n").unwrap();
    let (code, out, _) = cli(&["--dict", dict.to_str().unwrap(), "--wall", "Mary", "ran"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("grammatical: 1, null links: 0"), "{out}");
    assert!(out.contains("LEFT-WALL mary ran"));
}

#[test]
fn resource_limit_is_recorded_not_fatal() {
    let dict = desk_dictionary();
    let corpus = "the big dog saw the old cat yesterday\n";
    let report = run_batch(corpus, &dict, &MergeList::new(), &CorpusOptions::default()).unwrap();
    assert!(matches!(report.records[0].outcome, Outcome::Parsed(_)));
    // a failed record still counts as parsed text but not in the averages
    let mut records = report.records.clone();
    records[0].outcome = Outcome::Failed(linkgram::ParseError::ResourceLimit { limit: 1 });
    let s = BatchStats::from_records(&records);
    assert_eq!(
        (s.sentences_not_skipped, s.failed, s.average_null_links()),
        (1, 1, None)
    );
    assert!(s.render(true).contains("# over resource limit"));
}

/// Arcs never cross, nest with strictly increasing rows, and each arc's row
/// is clear between its ends.
fn check_nesting(lk: &linkgram::Linkage, words: &[String]) -> Result<(), TestCaseError> {
    let arcs = layout(lk);
    for a in &arcs {
        for b in &arcs {
            if a == b {
                continue;
            }
            let crossing = a.left < b.left && b.left < a.right && a.right < b.right;
            prop_assert!(!crossing);
            if a.left <= b.left && b.right <= a.right {
                prop_assert!(a.level > b.level);
            }
        }
    }
    let text = render_ascii(lk, words);
    let lines: Vec<Vec<char>> = text.lines().map(|l| l.chars().collect()).collect();
    let height = arcs.iter().map(|a| a.level).max().unwrap_or(0);
    let col = |w: usize| {
        // the baseline holds the words left to right, one column each start
        let base: String = lines.last().unwrap().iter().collect();
        let mut from = 0;
        let mut x = 0;
        for word in &words[..=w] {
            x = from + base[from..].find(word.as_str()).unwrap();
            from = x + word.len();
        }
        x
    };
    for a in &arcs {
        let row = &lines[height - a.level];
        let (l, r) = (col(a.left), col(a.right));
        prop_assert_eq!(row[l], '+');
        prop_assert_eq!(row[r], '+');
        prop_assert!(row[l + 1..r].iter().all(|&c| c != '+' && c != '|'));
    }
    Ok(())
}

proptest! {
    #[test]
    fn diagrams_nest(seed in any::<u64>()) {
        let inst = random_instance(&mut rng(seed), &GrammarConfig::default(), 2, 7);
        let p = prepare(&inst.dict, &inst.words, &PrepareOptions::default());
        let mut e = Engine::new(&p.index, EngineOptions::default()).unwrap();
        let (lks, _) = enumerate_linkages(&mut e, 20);
        for lk in &lks {
            check_nesting(lk, &inst.words)?;
        }
    }
}
