//! Run the verification suite from code and list any failures.
//!
//! cargo run --release --example verify_suite -- D4 2,3

use stickelberger::cli::{verify, Command, Format, GroupSource, RunConfig};

fn main() -> stickelberger::Result<()> {
    let mut args = std::env::args().skip(1);
    let group = args.next().unwrap_or_else(|| "D4".into());
    let mut cfg = RunConfig::new(Command::Verify, GroupSource::Named(group));
    if let Some(qs) = args.next() {
        cfg.qs = qs.split(',').map(|q| q.parse().expect("integer q")).collect();
    }
    let report = verify(&cfg)?;
    print!("{}", report.render(Format::Pretty)?);
    for f in report.failures() {
        println!("failed {}: {}", f.id, f.counterexample.as_deref().unwrap_or(""));
    }
    Ok(())
}
