//! The `parse` command.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Parser;
use linkgram::dictionary::LEFT_WALL;
use linkgram::Dictionary;

use crate::corpus::{parse_sentence, run_batch, CorpusOptions, Outcome, Parsed, SentenceRecord};
use crate::normalize::{normalize, MergeList};
use crate::render::render_ascii;
use crate::CliError;

/// Parse sentences with a link grammar, using null links where no
/// grammatical linkage exists.
#[derive(Debug, Parser)]
#[command(name = "parse", version)]
pub struct Args {
    /// Dictionary file; the bundled dictionary if absent.
    #[arg(long, value_name = "FILE")]
    pub dict: Option<PathBuf>,
    /// Phrases to join into single tokens, one per line.
    #[arg(long, value_name = "FILE")]
    pub merge_list: Option<PathBuf>,
    /// Longest sentence cut from an utterance.
    #[arg(long, value_name = "N", default_value_t = 25)]
    pub max_tokens: usize,
    /// Shorter sentences are skipped in batch mode.
    #[arg(long, value_name = "N", default_value_t = 4)]
    pub min_words: usize,
    #[arg(long, value_name = "N")]
    pub max_link_length: Option<usize>,
    /// Linkages shown per sentence.
    #[arg(long, value_name = "N", default_value_t = 10)]
    pub linkage_limit: usize,
    /// Put LEFT-WALL in front of every sentence.
    #[arg(long)]
    pub wall: bool,
    /// Pruning sizes and timings on standard error.
    #[arg(long)]
    pub verbose: bool,
    /// Write the statistics table here instead of standard error.
    #[arg(long, value_name = "FILE")]
    pub stats_out: Option<PathBuf>,
    /// Print `masked` in place of timings in the statistics table.
    #[arg(long)]
    pub mask_timings: bool,
    /// One utterance per line.
    #[arg(long, value_name = "CORPUS", conflicts_with = "sentence")]
    pub batch: Option<PathBuf>,
    /// Sentence to parse; several arguments are joined with spaces.
    pub sentence: Vec<String>,
}

impl Args {
    fn corpus_options(&self) -> CorpusOptions {
        CorpusOptions {
            max_tokens_per_sentence: self.max_tokens,
            min_words: self.min_words,
            max_link_length: self.max_link_length,
            linkage_limit: self.linkage_limit,
            wall: self.wall,
            ..CorpusOptions::default()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load_dictionary(args: &Args) -> Result<Dictionary, CliError> {
    let dict = match &args.dict {
        Some(path) => Dictionary::parse(&read(path)?).map_err(|source| CliError::Dictionary {
            path: path.display().to_string(),
            source,
        })?,
        None => linkgram::desk_dictionary(),
    };
    if args.wall && dict.get(LEFT_WALL).is_none() {
        return Err(CliError::Usage(format!(
            "--wall needs a dictionary that defines {LEFT_WALL}"
        )));
    }
    Ok(dict)
}

/// Record of one sentence as printed on standard output.
pub fn format_record(r: &SentenceRecord) -> String {
    let mut out = String::new();
    let shown = if r.words.is_empty() {
        "(empty)".to_owned()
    } else {
        r.words.join(" ")
    };
    match &r.outcome {
        Outcome::Skipped => {
            writeln!(out, "[{}.{}] skipped: {shown}", r.utterance + 1, r.piece + 1).unwrap();
        }
        Outcome::Failed(e) => {
            writeln!(out, "[{}.{}] {shown}", r.utterance + 1, r.piece + 1).unwrap();
            writeln!(out, "failed: {e}").unwrap();
        }
        Outcome::Parsed(p) => {
            writeln!(out, "[{}.{}] {shown}", r.utterance + 1, r.piece + 1).unwrap();
            out.push_str(&format_parsed(p, &r.words, r.unknown_words));
        }
    }
    out
}

fn format_parsed(p: &Parsed, words: &[String], unknown: bool) -> String {
    let mut out = String::new();
    write!(
        out,
        "grammatical: {}, null links: {}, linkages: {}",
        p.grammatical_count, p.min_cost, p.min_cost_count
    )
    .unwrap();
    if unknown {
        out.push_str(", unknown words");
    }
    out.push('\n');
    if p.truncated {
        writeln!(out, "showing the first {}", p.linkages.len()).unwrap();
    }
    for lk in &p.linkages {
        out.push('\n');
        out.push_str(&render_ascii(lk, words));
    }
    out.push('\n');
    out
}

fn format_verbose(r: &SentenceRecord) -> Option<String> {
    let p = r.parsed()?;
    let s = p.prune_stats;
    Some(format!(
        "[{}.{}] leaves {} -> {} in {} passes, disjuncts {} -> {} in {} passes, {:.3} ms\n",
        r.utterance + 1,
        r.piece + 1,
        s.leaves_before,
        s.leaves_after,
        s.expression_passes,
        s.disjuncts_expanded,
        s.disjuncts_after_power,
        s.power_passes,
        r.elapsed.as_secs_f64() * 1e3
    ))
}

fn execute(args: &Args, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let opts = args.corpus_options();
    opts.validate()?;
    let dict = load_dictionary(args)?;
    let merges = match &args.merge_list {
        Some(path) => MergeList::parse(&read(path)?)?,
        None => MergeList::new(),
    };
    let stdout_err = |source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    };
    if let Some(corpus) = &args.batch {
        let report = run_batch(&read(corpus)?, &dict, &merges, &opts)?;
        for r in &report.records {
            out.write_all(format_record(r).as_bytes()).map_err(stdout_err)?;
            if args.verbose {
                if let Some(v) = format_verbose(r) {
                    let _ = err.write_all(v.as_bytes());
                }
            }
        }
        let table = report.stats.render(args.mask_timings);
        match &args.stats_out {
            Some(path) => fs::write(path, table).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?,
            None => {
                let _ = err.write_all(table.as_bytes());
            }
        }
        return Ok(());
    }
    if args.sentence.is_empty() {
        return Err(CliError::Usage("give a SENTENCE or --batch CORPUS".to_owned()));
    }
    let tokens = normalize(&args.sentence.join(" "), &opts.normalize_options(), &merges);
    if tokens.is_empty() {
        return Err(CliError::Usage("the sentence has no words".to_owned()));
    }
    let start = std::time::Instant::now();
    let (words, unknown_words, result) = parse_sentence(&dict, &tokens, &opts);
    let record = SentenceRecord {
        utterance: 0,
        piece: 0,
        words,
        tokens: tokens.len(),
        unknown_words,
        outcome: match result {
            Ok(p) => Outcome::Parsed(p),
            Err(e) => Outcome::Failed(e),
        },
        elapsed: start.elapsed(),
    };
    let text = match record.parsed() {
        Some(p) => format_parsed(p, &record.words, record.unknown_words),
        None => format_record(&record),
    };
    out.write_all(text.as_bytes()).map_err(stdout_err)?;
    if args.verbose {
        if let Some(v) = format_verbose(&record) {
            let _ = err.write_all(v.as_bytes());
        }
    }
    Ok(())
}

/// Runs the command and returns its exit status: 0 on success, 1 for usage
/// and dictionary errors, 2 for I/O errors.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            // --help and --version also arrive here, on stdout with status 0
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                1
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    match execute(&args, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "parse: {e}");
            e.exit_code()
        }
    }
}
