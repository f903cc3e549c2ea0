use std::fs;
use std::path::PathBuf;

use clap::Args;
use rational_dyck::DyckPath;

use crate::Failure;

/// A single path from flags, or one path per line from a file.
#[derive(Debug, Args)]
pub struct PathInput {
    /// Number of north steps (rows of the grid)
    #[arg(long)]
    pub a: Option<usize>,
    /// Number of east steps (columns of the grid)
    #[arg(long)]
    pub b: Option<usize>,
    /// Step word over {N,E}
    #[arg(long)]
    pub path: Option<String>,
    /// File with one `a b steps` line per path; blank lines and `#` comments are skipped
    #[arg(long, conflicts_with_all = ["a", "b", "path"])]
    pub file: Option<PathBuf>,
}

impl PathInput {
    pub fn paths(&self) -> Result<Vec<DyckPath>, Failure> {
        if let Some(file) = &self.file {
            let text = fs::read_to_string(file)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", file.display())))?;
            return text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
                .map(|(n, l)| {
                    l.parse::<DyckPath>()
                        .map_err(|e| Failure::usage(format!("{}:{}: {e}", file.display(), n + 1)))
                })
                .collect();
        }
        match (self.a, self.b, &self.path) {
            (Some(a), Some(b), Some(word)) => DyckPath::parse(a, b, word)
                .map(|p| vec![p])
                .map_err(|e| Failure::usage(e.to_string())),
            _ => Err(Failure::usage("give --a, --b and --path, or --file")),
        }
    }
}
