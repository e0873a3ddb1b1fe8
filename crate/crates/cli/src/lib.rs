//! Command-line front end: argument parsing, dispatch to the library, and
//! plain-text / JSON report rendering with stable schemas and exit codes.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 domain validation error,
//! 4 internal invariant violation (a cross-check mismatch during `verify`).

mod report;
mod request;
mod render;

pub use report::{dispatch, CommandReport, Payload};
pub use request::{parse_request, CliError, CommandRequest, OutputFormat, SubcommandKind};

/// Parses `argv`, dispatches, and renders in the requested format.
pub fn run(argv: &[String]) -> Result<String, CliError> {
    let request = parse_request(argv)?;
    let report = dispatch(&request)?;
    match request.format {
        OutputFormat::Text => Ok(render::render_text(&report)),
        OutputFormat::Json => {
            let mut body = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
            body.push('\n');
            Ok(body)
        }
    }
}
