//! Corpus statistics laid out like the usual robust-parser results table.

use std::fmt::Write;
use std::time::Duration;

use crate::corpus::{Outcome, SentenceRecord};

/// Skipped sentences only feed the two "skipped" rows; every other entry is
/// computed over the sentences that were parsed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BatchStats {
    pub sentences_not_skipped: usize,
    pub sentences_skipped: usize,
    pub grammatical: usize,
    pub with_unknown_words: usize,
    pub words_not_skipped: usize,
    pub words_skipped: usize,
    /// Sentences abandoned at the resource limit. They count as not skipped
    /// but take no part in the averages.
    pub failed: usize,
    pub linkages_total: u128,
    pub null_links_total: u64,
    pub total_time: Duration,
    pub max_time: Duration,
}

impl BatchStats {
    pub fn from_records(records: &[SentenceRecord]) -> Self {
        let mut s = BatchStats::default();
        for r in records {
            if r.is_skipped() {
                s.sentences_skipped += 1;
                s.words_skipped += r.tokens;
                continue;
            }
            s.sentences_not_skipped += 1;
            s.words_not_skipped += r.tokens;
            s.with_unknown_words += usize::from(r.unknown_words);
            s.total_time += r.elapsed;
            s.max_time = s.max_time.max(r.elapsed);
            match &r.outcome {
                Outcome::Parsed(p) => {
                    s.grammatical += usize::from(p.grammatical_count > 0);
                    s.linkages_total = s.linkages_total.saturating_add(p.min_cost_count);
                    s.null_links_total += u64::from(p.min_cost);
                }
                Outcome::Failed(_) => s.failed += 1,
                Outcome::Skipped => unreachable!(),
            }
        }
        s
    }

    fn parsed(&self) -> usize {
        self.sentences_not_skipped - self.failed
    }

    pub fn average_linkages(&self) -> Option<f64> {
        (self.parsed() > 0).then(|| self.linkages_total as f64 / self.parsed() as f64)
    }

    pub fn average_null_links(&self) -> Option<f64> {
        (self.parsed() > 0).then(|| self.null_links_total as f64 / self.parsed() as f64)
    }

    /// The table as text. With `mask_timings` the two time rows read
    /// `masked`, which makes the output reproducible.
    pub fn render(&self, mask_timings: bool) -> String {
        let sentences = self.sentences_not_skipped + self.sentences_skipped;
        let words = self.words_not_skipped + self.words_skipped;
        let count = |n: usize, of: usize| match percent(n, of) {
            Some(p) => format!("{n} ({p}%)"),
            None => format!("{n} (n/a)"),
        };
        let avg = |x: Option<f64>| x.map_or_else(|| "n/a".to_owned(), |x| format!("{x:.2}"));
        let time = |d: Duration| {
            if mask_timings {
                "masked".to_owned()
            } else {
                format!("{:.3}", d.as_secs_f64())
            }
        };
        let max_time = if self.sentences_not_skipped == 0 {
            "n/a".to_owned()
        } else {
            time(self.max_time)
        };
        let mut rows = vec![
            (
                "sentences",
                "# not skipped",
                count(self.sentences_not_skipped, sentences),
            ),
            ("", "# skipped (too short)", count(self.sentences_skipped, sentences)),
            ("", "# grammatical", count(self.grammatical, self.parsed())),
            (
                "",
                "# with unknown words",
                count(self.with_unknown_words, self.sentences_not_skipped),
            ),
        ];
        if self.failed > 0 {
            rows.push((
                "",
                "# over resource limit",
                count(self.failed, self.sentences_not_skipped),
            ));
        }
        rows.extend([
            ("words", "# not skipped", count(self.words_not_skipped, words)),
            ("", "# skipped (too short)", count(self.words_skipped, words)),
            ("linkages", "Average # per sentence", avg(self.average_linkages())),
            ("", "Average # of null links", avg(self.average_null_links())),
            ("time", "Total wall time (seconds)", time(self.total_time)),
            ("", "Maximum for one sentence", max_time),
        ]);
        let mut out = String::new();
        for (group, label, value) in rows {
            writeln!(out, "{group:<10}{label:<28}{value:>12}").unwrap();
        }
        out
    }
}

/// Rounded to the nearest whole percent, halves up.
fn percent(n: usize, of: usize) -> Option<usize> {
    (of > 0).then(|| (200 * n + of) / (2 * of))
}
