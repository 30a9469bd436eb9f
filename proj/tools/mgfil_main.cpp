// Batch front end.  Links the C API only.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mgfil.h"

namespace {

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mgfil: Hilbert polynomials, reductions and postulation vectors of "
               "multigraded filtrations of monomial ideals"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "run the analyses requested by a document");
  std::string specfile;
  std::string command;
  std::string format = "table";
  std::string outpath;
  int box = -1, margin = -1, offset = -1;
  analyze->add_option("specfile", specfile, "filtration document")->required();
  analyze->add_option("--command", command,
                      "verify-all|hilbert|reductions|postulation|huneke|h1 "
                      "(default: the document's)");
  analyze->add_option("--box", box, "verification box (default: the document's)");
  analyze->add_option("--margin", margin, "certification margin");
  analyze->add_option("--offset", offset, "base sampling offset for fits");
  analyze->add_option("--format", format, "table|structured|plotdata")
      ->check(CLI::IsMember({"table", "structured", "plotdata"}));
  analyze->add_option("--out", outpath, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  std::ifstream in(specfile);
  if (!in) return fail_usage("cannot read '" + specfile + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  mgfil_document* doc = nullptr;
  if (mgfil_document_parse(text.c_str(), text.size(), &doc) != MGFIL_OK)
    return fail_usage(mgfil_last_error());

  mgfil_options opt;
  mgfil_options_init(&opt);
  opt.box = box;
  opt.margin = margin;
  opt.offset = offset;
  if (const char* env = std::getenv("MGFIL_THREADS")) opt.threads = std::atoi(env);

  mgfil_bundle* bundle = nullptr;
  mgfil_status st =
      mgfil_run(doc, command.empty() ? nullptr : command.c_str(), &opt, &bundle);
  if (st != MGFIL_OK) {
    std::string msg = mgfil_last_error();
    mgfil_document_free(doc);
    if (st == MGFIL_ERR_INVALID_ARGUMENT || st == MGFIL_ERR_PARSE) return fail_usage(msg);
    std::cerr << "error: " << msg << "\n";
    return st == MGFIL_ERR_UNSUPPORTED ? 2 : 3;
  }

  char* bytes = nullptr;
  size_t len = 0;
  if (mgfil_emit(bundle, format.c_str(), &bytes, &len) != MGFIL_OK) {
    std::string msg = mgfil_last_error();
    mgfil_bundle_free(bundle);
    mgfil_document_free(doc);
    return fail_usage(msg);
  }

  if (outpath.empty()) {
    std::cout.write(bytes, static_cast<std::streamsize>(len));
  } else {
    std::ofstream out(outpath, std::ios::binary);
    if (!out) {
      mgfil_buffer_free(bytes);
      mgfil_bundle_free(bundle);
      mgfil_document_free(doc);
      return fail_usage("cannot write '" + outpath + "'");
    }
    out.write(bytes, static_cast<std::streamsize>(len));
  }

  int rc = static_cast<int>(mgfil_bundle_verdict(bundle));
  mgfil_buffer_free(bytes);
  mgfil_bundle_free(bundle);
  mgfil_document_free(doc);
  return rc;
}
