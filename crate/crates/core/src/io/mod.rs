//! Problem documents, command dispatch, output and the series cache.

pub mod cache;
pub mod commands;
pub mod document;

pub use cache::{cache_key, series_with_cache, CacheStatus, SeriesCache, CACHE_ENV};
pub use commands::{run_command, CliError, Command, CommandOutput, Settings, Table};
pub use document::{parse_input, Format, Options, ParseError, ProblemDocument};
