#include "gausseer/cli.hpp"

#include <atomic>
#include <chrono>
#include <csignal>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <httplib.h>

#include "gausseer/error.hpp"
#include "gausseer/ingest.hpp"
#include "gausseer/service.hpp"
#include "gausseer/snapshot_io.hpp"
#include "gausseer/text.hpp"

namespace gausseer {

namespace {

std::atomic<bool> g_reload_requested{false};
std::atomic<bool> g_stop_requested{false};

extern "C" void on_signal(int sig) {
  if (sig == SIGHUP) {
    g_reload_requested = true;
  } else {
    g_stop_requested = true;
  }
}

struct IngestArgs {
  std::string root;
  std::string index;
  std::string taxonomy;
  std::string xml_out;
  std::string ext = "log,out";
};

struct SearchArgs {
  std::string index;
  std::string elements;
  std::string mode = "contains";
  std::string method;
  std::string jobtype;
  std::string basis;
  std::string op = "and";
  std::vector<std::string> refine;
  std::size_t page = 1;
  bool json = false;
};

struct ShowArgs {
  std::string index;
  DocId id = 0;
};

struct ServeArgs {
  std::string index;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
};

// IO and snapshot-format failures are fatal (1); everything else is a usage
// problem (2).
int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::IoError:
    case ErrorKind::FormatError:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
  return exit_code_for(e);
}

int do_ingest(const IngestArgs& a, std::ostream& out) {
  const Taxonomy taxonomy =
      a.taxonomy.empty() ? default_taxonomy() : load_taxonomy_file(a.taxonomy);
  IngestOptions options;
  options.root_dir = a.root;
  options.index_path = a.index;
  if (!a.xml_out.empty()) options.xml_out_dir = a.xml_out;
  options.extensions = text::split_top_level(a.ext, ',');
  const auto report = ingest_corpus(options, taxonomy);
  out << to_json(report).dump(2) << "\n";
  return kExitOk;
}

void print_facets(const SearchResponse& resp, std::ostream& out) {
  out << "facets:\n";
  for (auto kind : kAttributeKinds) {
    out << "  " << to_string(kind) << ":\n";
    for (const auto& f : resp.facets.at(kind)) {
      out << "    " << f.value << " (" << f.count << ")\n";
    }
  }
}

int do_search(const SearchArgs& a, std::ostream& out) {
  const auto snapshot = load_snapshot(a.index);
  Params params{{"elements", a.elements}, {"mode", a.mode},   {"method", a.method},
                {"jobtype", a.jobtype},   {"basis", a.basis}, {"op", a.op}};
  for (const auto& r : a.refine) params.emplace("refine", r);
  if (a.page == 0) throw Error(ErrorKind::BadPage, "page must be a positive integer");
  const auto resp = search_page(snapshot, query_from_params(params), a.page);
  if (a.json) {
    out << to_json(resp).dump(2) << "\n";
    return kExitOk;
  }
  const auto pages = std::max<std::size_t>(1, (resp.total + kPageSize - 1) / kPageSize);
  out << "total: " << resp.total << " (page " << resp.page << " of " << pages << ")\n";
  for (const auto& r : resp.results) {
    out << std::setw(6) << r.id << "  " << r.title << "  [" << r.summary << "]\n";
  }
  print_facets(resp, out);
  return kExitOk;
}

int do_show(const ShowArgs& a, std::ostream& out) {
  const auto snapshot = load_snapshot(a.index);
  out << doc_detail_json(get_document(snapshot, a.id), snapshot.taxonomy()).dump(2) << "\n";
  return kExitOk;
}

int do_serve(const ServeArgs& a, std::ostream& out, std::ostream& err) {
  SearchService service(std::make_shared<const IndexSnapshot>(load_snapshot(a.index)));
  httplib::Server server;
  const std::optional<std::string> static_dir =
      a.static_dir.empty() ? std::nullopt : std::optional(a.static_dir);
  if (!install_routes(server, service, static_dir)) {
    throw Error(ErrorKind::IoError, "cannot serve static directory '" + a.static_dir + "'");
  }

  g_reload_requested = false;
  g_stop_requested = false;
  std::signal(SIGHUP, on_signal);
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  // SIGHUP reloads the snapshot from disk; a bad file keeps the old one.
  std::jthread watcher([&](std::stop_token stop) {
    while (!stop.stop_requested()) {
      std::this_thread::sleep_for(std::chrono::milliseconds(200));
      if (g_stop_requested.exchange(false)) server.stop();
      if (!g_reload_requested.exchange(false)) continue;
      try {
        service.swap_snapshot(std::make_shared<const IndexSnapshot>(load_snapshot(a.index)));
        err << "reloaded " << a.index << " (version " << service.snapshot_version() << ")\n";
      } catch (const Error& e) {
        err << "reload failed: " << e.what() << "\n";
      }
    }
  });

  out << "serving " << a.index << " on http://" << a.host << ":" << a.port << "\n" << std::flush;
  if (!server.listen(a.host, a.port)) {
    throw Error(ErrorKind::IoError, "cannot listen on " + a.host + ":" + std::to_string(a.port));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Faceted search over Gaussian output files", "gausseer"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Parse a directory of logs and build an index");
  ingest_cmd->add_option("dir", ingest.root, "Corpus root directory")->required();
  ingest_cmd->add_option("--index", ingest.index, "Output snapshot path")->required();
  ingest_cmd->add_option("--taxonomy", ingest.taxonomy, "Taxonomy config (default: bundled)");
  ingest_cmd->add_option("--xml-out", ingest.xml_out, "Directory for per-file XML records");
  ingest_cmd->add_option("--ext", ingest.ext, "Comma-separated extensions")->capture_default_str();

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Query an index");
  search_cmd->add_option("--index", search.index, "Snapshot path")->required();
  search_cmd->add_option("--elements", search.elements, "Comma-separated element symbols")
      ->required();
  search_cmd->add_option("--mode", search.mode, "exact|contains")->capture_default_str();
  search_cmd->add_option("--method", search.method, "Method category or token");
  search_cmd->add_option("--jobtype", search.jobtype, "Job type category or token");
  search_cmd->add_option("--basis", search.basis, "Basis set category or token");
  search_cmd->add_option("--op", search.op, "and|or")->capture_default_str();
  search_cmd->add_option("--refine", search.refine, "Facet refinement field:value (repeatable)");
  search_cmd->add_option("--page", search.page, "1-based page")->capture_default_str();
  search_cmd->add_flag("--json", search.json, "Print the API response JSON");

  ShowArgs show;
  auto* show_cmd = app.add_subcommand("show", "Print one document's details");
  show_cmd->add_option("--index", show.index, "Snapshot path")->required();
  show_cmd->add_option("--id", show.id, "Document id")->required();

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--index", serve.index, "Snapshot path")->required();
  serve_cmd->add_option("--port", serve.port, "TCP port")->capture_default_str();
  serve_cmd->add_option("--host", serve.host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--static", serve.static_dir, "UI bundle directory served under /");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest_cmd) return do_ingest(ingest, out);
    if (*search_cmd) return do_search(search, out);
    if (*show_cmd) return do_show(show, out);
    if (*serve_cmd) return do_serve(serve, out, err);
  } catch (const Error& e) {
    return report_error(e, err);
  }
  return kExitUsage;
}

}  // namespace gausseer
