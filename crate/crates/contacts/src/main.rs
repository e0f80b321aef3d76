//! Contact-book command line: every subcommand is one traversal of the
//! composite phone-number optic under a different effect.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use contacts_cli::{
    count_odd_digit_sums, list_book_phones, print_book, read_book, serialize_book, tidy_book,
    BookError,
};

#[derive(Parser)]
#[command(name = "contacts", about = "Contact book manipulated through composed optics")]
struct Cli {
    /// Accepted for interface stability; every command is deterministic.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize every phone number and write the book back out.
    Tidy {
        input: String,
        /// Output path; stdout when omitted.
        #[arg(short, long, value_name = "FILE")]
        output: Option<String>,
    },
    /// Print the phone numbers, one per line, in entry order.
    List { input: String },
    /// Print each phone number, then echo the (unchanged) book.
    Print { input: String },
    /// Count phone numbers whose digit sum is odd.
    CountOdd { input: String },
}

fn run(command: Command) -> Result<(), BookError> {
    match command {
        Command::Tidy { input, output } => {
            let tidied = tidy_book(read_book(&input)?);
            let text = serialize_book(&tidied);
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|source| BookError::Unreadable {
                        path,
                        source,
                    })?
                }
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::List { input } => {
            for number in list_book_phones(read_book(&input)?) {
                println!("{number}");
            }
            Ok(())
        }
        Command::Print { input } => {
            let (lines, book) = print_book(read_book(&input)?);
            for line in lines {
                println!("{line}");
            }
            print!("{}", serialize_book(&book));
            Ok(())
        }
        Command::CountOdd { input } => {
            println!("{}", count_odd_digit_sums(read_book(&input)?));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
