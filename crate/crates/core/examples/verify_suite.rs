//! Runs the structural checks over a corpus and prints the tallies.
//!
//! `cargo run --release --example verify_suite -- families T1,C4,VED`

use mnn::corpus::{corpus_generate, CorpusId};
use mnn::group::Caps;
use mnn::harness::{run_suite, CheckId, Status};

fn main() -> mnn::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let id: CorpusId = args.next().as_deref().unwrap_or("families").parse()?;
    let checks = match args.next() {
        Some(list) => CheckId::parse_list(&list)?,
        None => CheckId::ALL.to_vec(),
    };
    let caps = Caps::from_env();
    let entries = corpus_generate(id, &caps)?;
    let report = run_suite(&entries, &checks, 0, caps);
    print!("{}", report.summary());
    for r in report.reports.iter().filter(|r| r.status == Status::Fail) {
        println!("{} {}: {}", r.check_id, r.group_label, r.witness);
    }
    println!("{} groups in {:.2?}", report.groups, report.wall_time);
    Ok(())
}
