#include "cfa/emit.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace cfa {

std::string format_shortest(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buffer, ptr);
}

std::string format_fixed6(double value) {
  char buffer[64];
  const int written = std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  if (written < 0) throw std::runtime_error("number formatting failed");
  return std::string(buffer, static_cast<std::size_t>(written));
}

std::string write_report_csv(const std::vector<ReportRow>& rows) {
  std::string out = "systems,method,weight_split,transductive,accuracy,precision,recall,f1\n";
  for (const auto& row : rows) {
    out += row.systems;
    out += ',';
    out += row.method_name;
    out += ',';
    out += row.weight_split ? to_string(*row.weight_split) : "-";
    out += ',';
    out += row.transductive ? "true" : "false";
    out += ',';
    out += format_fixed6(row.report.accuracy);
    out += ',';
    out += format_fixed6(row.report.precision);
    out += ',';
    out += format_fixed6(row.report.recall);
    out += ',';
    out += format_fixed6(row.report.f1);
    out += '\n';
  }
  return out;
}

std::string write_predictions_csv(const std::vector<std::string>& item_ids,
                                  const std::optional<std::vector<int>>& labels,
                                  const std::vector<double>& fused_values,
                                  const std::vector<int>& predictions) {
  std::string out = "item_id,label,fused_value,prediction\n";
  for (std::size_t i = 0; i < item_ids.size(); ++i) {
    out += item_ids[i];
    out += ',';
    if (labels) out += (*labels)[i] ? '1' : '0';
    out += ',';
    out += format_shortest(fused_values[i]);
    out += ',';
    out += predictions[i] ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string write_metrics_json(const ReportRow& row, double threshold, double positive_prior,
                               RcWeighting rc_weighting, TiePolicy tie_policy) {
  nlohmann::ordered_json doc;
  doc["systems"] = row.systems;
  doc["method"] = row.method_name;
  doc["weight_split"] = row.weight_split ? to_string(*row.weight_split) : "-";
  doc["transductive"] = row.transductive;
  doc["threshold"] = threshold;
  doc["positive_prior"] = positive_prior;
  doc["rc_weighting"] = to_string(rc_weighting);
  doc["tie_policy"] = to_string(tie_policy);
  doc["tp"] = row.report.confusion.tp;
  doc["fp"] = row.report.confusion.fp;
  doc["tn"] = row.report.confusion.tn;
  doc["fn"] = row.report.confusion.fn;
  doc["accuracy"] = row.report.accuracy;
  doc["precision"] = row.report.precision;
  doc["recall"] = row.report.recall;
  doc["f1"] = row.report.f1;
  doc["degenerate"] = row.report.degenerate;
  return doc.dump(2) + "\n";
}

std::string write_eval_json(const EvalReport& report) {
  nlohmann::ordered_json doc;
  doc["tp"] = report.confusion.tp;
  doc["fp"] = report.confusion.fp;
  doc["tn"] = report.confusion.tn;
  doc["fn"] = report.confusion.fn;
  doc["accuracy"] = report.accuracy;
  doc["precision"] = report.precision;
  doc["recall"] = report.recall;
  doc["f1"] = report.f1;
  doc["degenerate"] = report.degenerate;
  return doc.dump(2) + "\n";
}

std::string write_diversity_csv(const DiversityMatrix& matrix) {
  std::string out = "system";
  for (const auto& id : matrix.system_ids) {
    out += ',';
    out += id;
  }
  out += '\n';
  for (std::size_t j = 0; j < matrix.system_ids.size(); ++j) {
    out += matrix.system_ids[j];
    for (const double entry : matrix.entries[j]) {
      out += ',';
      out += format_fixed6(entry);
    }
    out += '\n';
  }
  return out;
}

std::string write_ds_csv(const WeightVector& weights) {
  std::string out = "system,ds\n";
  for (std::size_t j = 0; j < weights.system_ids.size(); ++j) {
    out += weights.system_ids[j];
    out += ',';
    out += format_fixed6(weights.weights[j]);
    out += '\n';
  }
  return out;
}

std::string write_rsc_csv(const std::vector<RscProfile>& profiles) {
  std::string out = "rank";
  for (const auto& profile : profiles) {
    out += ',';
    out += profile.system_id;
  }
  out += '\n';
  const std::size_t n = profiles.empty() ? 0 : profiles.front().values.size();
  for (std::size_t i = 0; i < n; ++i) {
    out += std::to_string(i + 1);
    for (const auto& profile : profiles) {
      out += ',';
      out += format_fixed6(profile.values[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

const char* line_color(std::size_t index) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
  return palette[index % (sizeof(palette) / sizeof(palette[0]))];
}

std::string svg_number(double value) {
  char buffer[32];
  const int written = std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return std::string(buffer, static_cast<std::size_t>(written));
}

}  // namespace

std::string write_rsc_svg(const std::vector<RscProfile>& profiles) {
  constexpr double width = 1000.0;
  constexpr double height = 600.0;
  constexpr double margin_left = 70.0;
  constexpr double margin_right = 150.0;
  constexpr double margin_top = 40.0;
  constexpr double margin_bottom = 50.0;
  const double plot_w = width - margin_left - margin_right;
  const double plot_h = height - margin_top - margin_bottom;
  const std::size_t n = profiles.empty() ? 0 : profiles.front().values.size();

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"600\" "
         "viewBox=\"0 0 1000 600\">\n";
  svg += "<rect width=\"1000\" height=\"600\" fill=\"white\"/>\n";

  // axes
  const double x0 = margin_left;
  const double y0 = margin_top + plot_h;
  svg += "<line x1=\"" + svg_number(x0) + "\" y1=\"" + svg_number(y0) + "\" x2=\"" +
         svg_number(x0 + plot_w) + "\" y2=\"" + svg_number(y0) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + svg_number(x0) + "\" y1=\"" + svg_number(margin_top) + "\" x2=\"" +
         svg_number(x0) + "\" y2=\"" + svg_number(y0) + "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + svg_number(x0 + plot_w / 2) + "\" y=\"" + svg_number(height - 12) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">rank</text>\n";
  svg += "<text x=\"18\" y=\"" + svg_number(margin_top + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 18 " +
         svg_number(margin_top + plot_h / 2) + ")\">normalized score</text>\n";
  for (const double tick : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double y = y0 - tick * plot_h;
    svg += "<line x1=\"" + svg_number(x0 - 4) + "\" y1=\"" + svg_number(y) + "\" x2=\"" +
           svg_number(x0) + "\" y2=\"" + svg_number(y) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + svg_number(x0 - 8) + "\" y=\"" + svg_number(y + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" + svg_number(tick) +
           "</text>\n";
  }

  for (std::size_t p = 0; p < profiles.size(); ++p) {
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += line_color(p);
    svg += "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < n; ++i) {
      const double x = n > 1 ? x0 + plot_w * static_cast<double>(i) / static_cast<double>(n - 1)
                             : x0 + plot_w / 2;
      const double y = y0 - profiles[p].values[i] * plot_h;
      if (i > 0) svg += ' ';
      svg += svg_number(x);
      svg += ',';
      svg += svg_number(y);
    }
    svg += "\"/>\n";
  }

  for (std::size_t p = 0; p < profiles.size(); ++p) {
    const double y = margin_top + 18.0 * static_cast<double>(p);
    svg += "<line x1=\"" + svg_number(width - margin_right + 12) + "\" y1=\"" + svg_number(y) +
           "\" x2=\"" + svg_number(width - margin_right + 36) + "\" y2=\"" + svg_number(y) +
           "\" stroke=\"" + line_color(p) + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + svg_number(width - margin_right + 42) + "\" y=\"" + svg_number(y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"13\">" + profiles[p].system_id + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace cfa
