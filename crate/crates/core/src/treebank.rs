//! Treebank ingestion: head-vector and CoNLL-U readers, punctuation
//! stripping, and parallel per-language collections.
//!
//! The head-vector format is the canonical on-disk form: one sentence per
//! line, `n` whitespace-separated integers where entry `j` is the head of
//! word `j` and `0` marks the root; lines starting with `#` are comments.
//! Word order is the token order, so the arrangement is the identity.
//! Collections live in `<root>/<style>/<language>.hv`.

use std::collections::BTreeSet;
use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::tree::{tree_from_heads, LinearArrangement, SentenceStructure, Style, Vertex};

/// Ingestion policy.
#[derive(Debug, Clone)]
pub struct ReadOptions {
    /// Sentences shorter than this are dropped (they still consume a
    /// sentence ordinal so parallel collections stay aligned).
    pub min_length: usize,
    /// Skip malformed input with a record instead of aborting.
    pub skip_bad: bool,
}

impl Default for ReadOptions {
    fn default() -> Self {
        ReadOptions {
            min_length: 3,
            skip_bad: false,
        }
    }
}

/// A malformed piece of input that was skipped under `skip_bad`.
#[derive(Debug, Clone)]
pub struct SkipRecord {
    pub location: String,
    pub reason: String,
}

/// The result of reading one file.
#[derive(Debug, Clone)]
pub struct ReadOutcome {
    pub sentences: Vec<SentenceStructure>,
    pub skipped: Vec<SkipRecord>,
    /// Sentences dropped for being shorter than the minimum length.
    pub dropped_short: usize,
}

/// Reads a head-vector file. Sentence ids are 1-based ordinals within the
/// file, which is what keeps parallel collections aligned line by line.
pub fn read_head_vectors(
    reader: impl BufRead,
    language: &str,
    style: Style,
    options: &ReadOptions,
) -> Result<ReadOutcome> {
    let mut sentences = Vec::new();
    let mut skipped = Vec::new();
    let mut dropped_short = 0usize;
    let mut ordinal = 0usize;
    for (index, line) in reader.lines().enumerate() {
        let line_no = index + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        ordinal += 1;
        let parsed = parse_head_line(text, line_no).and_then(|heads| {
            if heads.len() < options.min_length {
                Ok(None)
            } else {
                let (tree, root) = tree_from_heads(&heads).map_err(|e| Error::Parse {
                    line: line_no,
                    message: e.to_string(),
                })?;
                Ok(Some((tree, root)))
            }
        });
        match parsed {
            Ok(None) => dropped_short += 1,
            Ok(Some((tree, root))) => {
                let n = tree.vertex_count();
                sentences.push(
                    SentenceStructure::new(
                        tree,
                        LinearArrangement::identity(n),
                        root,
                        language,
                        style,
                        ordinal.to_string(),
                    )
                    .expect("decoded sentence is valid"),
                );
            }
            Err(err) => {
                if options.skip_bad {
                    skipped.push(SkipRecord {
                        location: format!("line {line_no}"),
                        reason: err.to_string(),
                    });
                } else {
                    return Err(err);
                }
            }
        }
    }
    Ok(ReadOutcome {
        sentences,
        skipped,
        dropped_short,
    })
}

fn parse_head_line(text: &str, line_no: usize) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("`{tok}` is not a head index"),
            })
        })
        .collect()
}

/// Writes sentences in head-vector form, one line each. Inverse of
/// [`read_head_vectors`] on identity-arranged collections.
pub fn write_head_vectors(sentences: &[SentenceStructure], mut writer: impl Write) -> Result<()> {
    for sentence in sentences {
        let parents = sentence.tree.parents_from(sentence.root)?;
        let line: Vec<String> = parents.iter().map(|p| p.to_string()).collect();
        writeln!(writer, "{}", line.join(" "))?;
    }
    Ok(())
}

struct PendingSentence {
    sent_id: Option<String>,
    forms: Vec<String>,
    upos: Vec<String>,
    heads: Vec<usize>,
    started: bool,
}

impl PendingSentence {
    fn new() -> Self {
        PendingSentence {
            sent_id: None,
            forms: Vec::new(),
            upos: Vec::new(),
            heads: Vec::new(),
            started: false,
        }
    }
}

/// Reads a CoNLL-U file: 10 tab-separated columns per token, blank line
/// between sentences. Only ID, FORM, UPOS and HEAD are consumed; multiword
/// range lines (`3-4`) and empty nodes (`5.1`) are skipped. Punctuation is
/// not removed here; pipe sentences through [`strip_punctuation`].
pub fn read_conllu(
    reader: impl BufRead,
    language: &str,
    style: Style,
    options: &ReadOptions,
) -> Result<ReadOutcome> {
    let mut out = ReadOutcome {
        sentences: Vec::new(),
        skipped: Vec::new(),
        dropped_short: 0,
    };
    let mut ordinal = 0usize;
    let mut pending = PendingSentence::new();

    for (index, line) in reader.lines().enumerate() {
        let line_no = index + 1;
        let line = line?;
        let text = line.trim_end_matches(['\r', '\n']);
        if text.trim().is_empty() {
            if pending.started {
                ordinal += 1;
                flush_sentence(
                    std::mem::replace(&mut pending, PendingSentence::new()),
                    ordinal,
                    language,
                    style,
                    options,
                    &mut out,
                )?;
            }
            continue;
        }
        if let Some(comment) = text.strip_prefix('#') {
            pending.started = true;
            if let Some((key, value)) = comment.split_once('=') {
                if key.trim() == "sent_id" {
                    pending.sent_id = Some(value.trim().to_string());
                }
            }
            continue;
        }
        pending.started = true;
        let columns: Vec<&str> = text.split('\t').collect();
        if columns.len() != 10 {
            let err = Error::Parse {
                line: line_no,
                message: format!("expected 10 columns, got {}", columns.len()),
            };
            if options.skip_bad {
                out.skipped.push(SkipRecord {
                    location: format!("line {line_no}"),
                    reason: err.to_string(),
                });
                continue;
            }
            return Err(err);
        }
        let id_col = columns[0];
        if id_col.contains('-') || id_col.contains('.') {
            // Multiword token range or empty node: not part of the tree.
            continue;
        }
        let token_id: usize = id_col.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("token id `{id_col}` is not an integer"),
        })?;
        if token_id != pending.heads.len() + 1 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("token id {token_id} out of sequence"),
            });
        }
        let head: usize = columns[6].parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("head `{}` is not an integer", columns[6]),
        })?;
        pending.forms.push(columns[1].to_string());
        pending.upos.push(columns[3].to_string());
        pending.heads.push(head);
    }
    if pending.started {
        ordinal += 1;
        flush_sentence(pending, ordinal, language, style, options, &mut out)?;
    }
    Ok(out)
}

fn flush_sentence(
    pending: PendingSentence,
    ordinal: usize,
    language: &str,
    style: Style,
    options: &ReadOptions,
    out: &mut ReadOutcome,
) -> Result<()> {
    let id = pending.sent_id.unwrap_or_else(|| ordinal.to_string());
    if pending.heads.len() < options.min_length {
        out.dropped_short += 1;
        return Ok(());
    }
    match tree_from_heads(&pending.heads) {
        Ok((tree, root)) => {
            let n = tree.vertex_count();
            let mut sentence = SentenceStructure::new(
                tree,
                LinearArrangement::identity(n),
                root,
                language,
                style,
                id,
            )
            .expect("decoded sentence is valid");
            sentence.forms = Some(pending.forms);
            sentence.upos = Some(pending.upos);
            out.sentences.push(sentence);
            Ok(())
        }
        Err(e) => {
            let err = Error::Sentence {
                id,
                message: e.to_string(),
            };
            if options.skip_bad {
                out.skipped.push(SkipRecord {
                    location: format!("sentence {ordinal}"),
                    reason: err.to_string(),
                });
                Ok(())
            } else {
                Err(err)
            }
        }
    }
}

/// Why a sentence did not survive punctuation stripping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StripRejection {
    /// The sentence carries no part-of-speech labels.
    MissingPos,
    /// Fewer than `min_length` tokens survive.
    TooShort { survivors: usize },
    /// The root is punctuation with several non-punctuation children, so
    /// there is no single vertex to promote.
    AmbiguousRoot,
}

impl std::fmt::Display for StripRejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StripRejection::MissingPos => write!(f, "no part-of-speech labels"),
            StripRejection::TooShort { survivors } => {
                write!(f, "only {survivors} tokens survive")
            }
            StripRejection::AmbiguousRoot => {
                write!(f, "punctuation root with several children")
            }
        }
    }
}

/// Removes PUNCT tokens, reattaching their children to the nearest
/// non-punctuation ancestor (transitively through punctuation chains) and
/// renumbering the survivors in their original order.
pub fn strip_punctuation(
    sentence: &SentenceStructure,
    min_length: usize,
) -> std::result::Result<SentenceStructure, StripRejection> {
    let upos = sentence.upos.as_ref().ok_or(StripRejection::MissingPos)?;
    let n = sentence.len();
    let heads = sentence
        .tree
        .parents_from(sentence.root)
        .expect("sentence tree is rooted");
    let is_punct = |v: Vertex| upos[v - 1] == "PUNCT";
    let kept: Vec<Vertex> = (1..=n).filter(|&v| !is_punct(v)).collect();
    if kept.len() < min_length {
        return Err(StripRejection::TooShort {
            survivors: kept.len(),
        });
    }
    // First non-punctuation vertex on the head chain, or 0 at the top.
    let climb = |mut v: Vertex| -> Vertex {
        while v != 0 && is_punct(v) {
            v = heads[v - 1];
        }
        v
    };
    let reattached: Vec<(Vertex, Vertex)> =
        kept.iter().map(|&v| (v, climb(heads[v - 1]))).collect();
    let top_count = reattached.iter().filter(|(_, h)| *h == 0).count();
    if top_count != 1 {
        return Err(StripRejection::AmbiguousRoot);
    }
    // Renumber survivors, preserving their arrangement order.
    let mut renumber = vec![0usope(); n + 1];
    for (new_id, &old_id) in kept.iter().enumerate() {
        renumber[old_id] = new_id + 1;
    }
    let new_heads: Vec<usize> = reattached
        .iter()
        .map(|&(_, h)| if h == 0 { 0 } else { renumber[h] })
        .collect();
    let (tree, root) = tree_from_heads(&new_heads).expect("reattachment preserves the tree");
    let mut order: Vec<Vertex> = kept.clone();
    order.sort_by_key(|&v| sentence.arrangement.position(v));
    let mut positions = vec![0usize; kept.len()];
    for (pos, &old_id) in order.iter().enumerate() {
        positions[renumber[old_id] - 1] = pos + 1;
    }
    let arrangement = LinearArrangement::new(positions).expect("renumbering is a permutation");
    let mut out = SentenceStructure::new(
        tree,
        arrangement,
        root,
        sentence.language.clone(),
        sentence.style,
        sentence.sentence_id.clone(),
    )
    .expect("stripped sentence is valid");
    out.forms = sentence
        .forms
        .as_ref()
        .map(|f| kept.iter().map(|&v| f[v - 1].clone()).collect());
    out.upos = Some(kept.iter().map(|&v| upos[v - 1].clone()).collect());
    Ok(out)
}

/// All sentences of one language in one annotation style.
#[derive(Debug, Clone)]
pub struct LanguageTreebank {
    pub language: String,
    pub style: Style,
    pub sentences: Vec<SentenceStructure>,
}

/// A parallel multi-language collection in one annotation style.
#[derive(Debug, Clone)]
pub struct TreebankCollection {
    pub style: Style,
    pub languages: Vec<LanguageTreebank>,
}

impl TreebankCollection {
    /// Loads `<root>/<style>/<language>.hv` for every language file found,
    /// in lexicographic language order.
    pub fn read_dir(root: &Path, style: Style, options: &ReadOptions) -> Result<Self> {
        let dir = root.join(style.to_string());
        let mut paths: Vec<_> = fs::read_dir(&dir)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", dir.display())))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|ext| ext == "hv"))
            .collect();
        paths.sort();
        if paths.is_empty() {
            return Err(Error::InvalidInput(format!(
                "no .hv files under {}",
                dir.display()
            )));
        }
        let mut languages = Vec::with_capacity(paths.len());
        for path in paths {
            let language = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("unknown")
                .to_string();
            let file = fs::File::open(&path)?;
            let outcome =
                read_head_vectors(std::io::BufReader::new(file), &language, style, options)
                    .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            languages.push(LanguageTreebank {
                language,
                style,
                sentences: outcome.sentences,
            });
        }
        Ok(TreebankCollection { style, languages })
    }

    /// Keeps only sentence ids present in every language, so that dropping
    /// a sentence anywhere drops it everywhere. Returns the number of
    /// sentences removed.
    pub fn reparallelize(&mut self) -> usize {
        let mut shared: Option<BTreeSet<String>> = None;
        for language in &self.languages {
            let ids: BTreeSet<String> = language
                .sentences
                .iter()
                .map(|s| s.sentence_id.clone())
                .collect();
            shared = Some(match shared {
                None => ids,
                Some(acc) => acc.intersection(&ids).cloned().collect(),
            });
        }
        let shared = shared.unwrap_or_default();
        let mut removed = 0;
        for language in &mut self.languages {
            let before = language.sentences.len();
            language
                .sentences
                .retain(|s| shared.contains(&s.sentence_id));
            removed += before - language.sentences.len();
        }
        removed
    }

    /// Every language must hold the same number of sentences.
    pub fn validate_parallel(&self) -> Result<()> {
        let mut counts = self.languages.iter().map(|l| l.sentences.len());
        let Some(first) = counts.next() else {
            return Err(Error::InvalidInput("empty collection".into()));
        };
        if counts.all(|c| c == first) {
            Ok(())
        } else {
            let detail: Vec<String> = self
                .languages
                .iter()
                .map(|l| format!("{}={}", l.language, l.sentences.len()))
                .collect();
            Err(Error::InvalidInput(format!(
                "languages are not parallel: {}",
                detail.join(" ")
            )))
        }
    }

    pub fn all_sentences(&self) -> impl Iterator<Item = &SentenceStructure> {
        self.languages.iter().flat_map(|l| l.sentences.iter())
    }
}
