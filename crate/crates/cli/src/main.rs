// Copyright 2026 The qshor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use qshor_cli::{emit, run, CliConfig, EXIT_USAGE};

fn main() -> ExitCode {
    let cfg = match CliConfig::try_parse() {
        Ok(cfg) => cfg,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(&cfg).and_then(|report| emit(&cfg, &report).map(|_| report.exit_code)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("qshor: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
