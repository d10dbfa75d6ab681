use std::fs::File;
use std::io::{self, BufWriter, Write};

use clap::ValueEnum;
use serde::Serialize;

use crate::{CliError, GlobalOpts};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

/// Resolved output settings for one command.
pub struct OutputConfig {
    pub format: Format,
    sink: Box<dyn Write>,
}

impl OutputConfig {
    pub fn new(g: &GlobalOpts, default_format: Format) -> Result<Self, CliError> {
        let sink: Box<dyn Write> = match &g.output {
            Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
                CliError::Invalid(format!("cannot create {}: {e}", path.display()))
            })?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Self {
            format: g.format.unwrap_or(default_format),
            sink,
        })
    }

    pub fn json<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut self.sink, value)
            .map_err(|e| CliError::Invalid(format!("output: {e}")))?;
        writeln!(self.sink)?;
        Ok(())
    }

    /// Writes `#`-prefixed header then tab-separated rows.
    pub fn tsv<R, S>(&mut self, header: &[&str], rows: R) -> Result<(), CliError>
    where
        R: IntoIterator<Item = Vec<S>>,
        S: AsRef<str>,
    {
        writeln!(self.sink, "#{}", header.join("\t"))?;
        for row in rows {
            let cells: Vec<&str> = row.iter().map(AsRef::as_ref).collect();
            writeln!(self.sink, "{}", cells.join("\t"))?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> Result<(), CliError> {
        self.sink.flush()?;
        Ok(())
    }
}

pub fn join<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
