//! Reading data and class files.

use std::fmt;
use std::fs;
use std::path::Path;

use motspec_core::datum::class_from_json_str;
use motspec_core::{CoreError, MonClass, ResolutionDatum};

/// Errors caused by the user's input; the CLI exits with status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

impl From<CoreError> for InputError {
    fn from(e: CoreError) -> InputError {
        InputError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

pub fn load_datum(path: &Path) -> Result<ResolutionDatum, InputError> {
    ResolutionDatum::from_json_str(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

pub fn load_class(path: &Path) -> Result<MonClass, InputError> {
    class_from_json_str(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}
