use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = freeqg_cli::run(std::env::args_os());
    // write errors (closed pipe) are ignored; the exit code still reports the outcome
    if outcome.document["verb"].is_null() {
        // usage, --help or --version: clap's own text
        let text = outcome.document["error"].as_str().unwrap_or_default();
        if outcome.code == 0 {
            let _ = std::io::stdout().write_all(text.as_bytes());
        } else {
            let _ = std::io::stderr().write_all(text.as_bytes());
        }
    } else {
        let doc = serde_json::to_string_pretty(&outcome.document).expect("JSON document");
        let _ = writeln!(std::io::stdout(), "{doc}");
        if let Some(msg) = outcome.document.get("error").and_then(|e| e.as_str()) {
            let _ = writeln!(std::io::stderr(), "error: {msg}");
        }
    }
    ExitCode::from(outcome.code as u8)
}
