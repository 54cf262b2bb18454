// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) { return owflab::cli::run(argc, argv, std::cout, std::cerr); }
