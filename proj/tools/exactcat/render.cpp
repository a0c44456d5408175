#include <sstream>

#include "commands.hpp"

namespace exactcat {

using nlohmann::json;

namespace {

std::string text_of(const json& described) { return described.at("text").get<std::string>(); }

std::string verdict(bool passed) { return passed ? "PASS" : "FAIL"; }

void render_law(std::ostream& out, const json& law, int indent) {
  const std::string pad(indent, ' ');
  out << pad << law.at("law").get<std::string>() << ": " << verdict(law.at("passed").get<bool>()) << " ("
      << law.at("instances") << " instances, " << law.at("discarded") << " discarded, " << law.at("failures")
      << " failures)\n";
  for (const json& w : law.at("witnesses")) {
    out << pad << "  witness " << w.at("instance").get<std::string>() << " (seed " << w.at("seed").dump()
        << ", " << w.at("shrink_steps") << " shrink steps): " << w.at("detail").get<std::string>() << "\n";
    out << pad << "    " << w.at("diagram").dump() << "\n";
  }
  if (law.contains("laws"))
    for (const json& sub : law.at("laws")) render_law(out, sub, indent + 2);
}

void render_check(std::ostream& out, const json& r) {
  out << "model " << r.at("model").get<std::string>() << ", seed " << r.at("seed").dump() << ", "
      << r.at("iterations") << " iterations\n";
  for (const json& suite : r.at("suites")) render_law(out, suite, 0);
  for (const json& s : r.at("skipped"))
    out << s.at("suite").get<std::string>() << ": skipped (" << s.at("reason").get<std::string>() << ")\n";
  out << "result: " << verdict(r.at("passed").get<bool>()) << "\n";
}

void render_resolve(std::ostream& out, const json& r) {
  out << "resolution of " << r.at("object").get<std::string>() << " = " << text_of(r.at("resolved")) << " in "
      << r.at("model").get<std::string>() << "\n";
  for (const json& c : r.at("components")) {
    const std::string n = c.at("degree").dump();
    out << "P_" << n << " = " << text_of(c.at("object"));
    out << (n == "0" ? "  augmentation " : "  d_" + n + " ") << c.at("map").dump() << "\n";
  }
  out << "truncated: " << (r.at("truncated").get<bool>() ? "yes" : "no") << "\n";
  out << "verified: " << (r.at("verified").get<bool>() ? "yes" : "no") << "\n";
}

void render_homology(std::ostream& out, const json& r) {
  const std::string name = r.at("complex").get<std::string>();
  for (const json& d : r.at("degrees"))
    out << "H^" << d.at("degree") << "(" << name << ") = " << text_of(d.at("homology")) << "\n";
  out << "all zero: " << (r.at("all_zero").get<bool>() ? "yes" : "no") << "\n";
}

void render_snake(std::ostream& out, const json& r) {
  const json& terms = r.at("terms");
  const json& arrows = r.at("arrows");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    out << terms[k].at("label").get<std::string>() << " = " << text_of(terms[k].at("object")) << "\n";
    if (k < arrows.size()) out << "  " << arrows[k].dump() << "\n";
  }
  const json& delta = r.at("delta");
  out << "delta: " << text_of(delta.at("from")) << " -> " << text_of(delta.at("to")) << " "
      << delta.at("matrix").dump() << "\n";
  out << "exact: " << (r.at("exact").get<bool>() ? "yes" : "no") << "\n";
}

void render_complete(std::ostream& out, const json& r) {
  out << "splitting " << r.at("idempotent").get<std::string>() << " on " << r.at("object").get<std::string>()
      << " = " << text_of(r.at("source")) << " in " << r.at("model").get<std::string>() << "\n";
  out << "kernel = " << text_of(r.at("kernel")) << "  " << r.at("kernel").at("presentation").dump() << "\n";
  out << "image = " << text_of(r.at("image")) << "  " << r.at("image").at("presentation").dump() << "\n";
  for (const char* name : {"k", "i", "l", "j"}) out << name << " = " << r.at("arrows").at(name).dump() << "\n";
  out << "verified: " << (r.at("verified").get<bool>() ? "yes" : "no") << "\n";
  out << "splits in base: " << (r.at("splits_in_base").get<bool>() ? "yes" : "no") << "\n";
}

}  // namespace

std::string render_human(const json& report) {
  std::ostringstream out;
  if (report.contains("error")) {
    const json& e = report.at("error");
    out << "error (" << e.at("kind").get<std::string>() << "): " << e.at("message").get<std::string>() << "\n";
    return out.str();
  }
  const std::string command = report.at("command").get<std::string>();
  if (command == "check") {
    render_check(out, report);
  } else if (command == "resolve") {
    render_resolve(out, report);
  } else if (command == "ext" || command == "tor") {
    out << report.at("group").get<std::string>() << " = " << report.at("text").get<std::string>() << "\n";
  } else if (command == "homology") {
    render_homology(out, report);
  } else if (command == "snake") {
    render_snake(out, report);
  } else if (command == "complete") {
    render_complete(out, report);
  } else {
    out << report.dump(2) << "\n";
  }
  return out.str();
}

}  // namespace exactcat
