//! JSON-lines corpora: a header line followed by one representation per line.

use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::quiver::{DimVector, EnhancedRep};

pub const CORPUS_FORMAT: &str = "eadhm-corpus";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusHeader {
    pub format: String,
    pub generator: String,
    pub dims: DimVector,
    pub seed: u64,
    pub count: usize,
}

impl CorpusHeader {
    pub fn new(generator: &str, dims: DimVector, seed: u64, count: usize) -> Self {
        CorpusHeader {
            format: CORPUS_FORMAT.into(),
            generator: format!("{generator} {}", env!("CARGO_PKG_VERSION")),
            dims,
            seed,
            count,
        }
    }
}

pub fn write_corpus<W: Write>(mut w: W, header: &CorpusHeader, reps: &[EnhancedRep]) -> io::Result<()> {
    writeln!(w, "{}", serde_json::to_string(header)?)?;
    for x in reps {
        writeln!(w, "{}", x.to_json())?;
    }
    Ok(())
}

pub fn read_corpus<R: BufRead>(r: R) -> Result<(CorpusHeader, Vec<EnhancedRep>)> {
    let mut lines = r.lines().map(|l| l.map_err(|e| CoreError::InvalidJson(e.to_string())));
    let first = lines.next().ok_or_else(|| CoreError::MissingField("corpus header".into()))??;
    let header: CorpusHeader =
        serde_json::from_str(&first).map_err(|e| CoreError::InvalidJson(format!("corpus header: {e}")))?;
    if header.format != CORPUS_FORMAT {
        return Err(CoreError::InvalidJson(format!("unknown corpus format {:?}", header.format)));
    }
    let mut reps = Vec::new();
    for line in lines {
        let line = line?;
        if !line.trim().is_empty() {
            reps.push(EnhancedRep::from_json(&line)?);
        }
    }
    Ok((header, reps))
}
