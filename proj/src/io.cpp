#include "kinwave/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kinwave {

std::string format_float(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void write_csv(const std::string& path, const Table& table) {
  if (table.header.size() != table.columns.size() || table.header.empty()) {
    throw std::invalid_argument("table needs one column per header entry");
  }
  const Eigen::Index rows = table.columns.front().size();
  for (const Eigen::ArrayXd& col : table.columns) {
    if (col.size() != rows) {
      throw std::invalid_argument("table columns must have equal length");
    }
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    out << (c == 0 ? "" : ",") << table.header[c];
  }
  out << "\n";
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c == 0 ? "" : ",") << format_float(table.columns[c][r]);
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("empty csv '" + path + "'");
  }
  Table table;
  {
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) table.header.push_back(item);
  }
  std::vector<std::vector<double>> cols(table.header.size());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string item;
    std::size_t c = 0;
    while (std::getline(ss, item, ',')) {
      if (c >= cols.size()) {
        throw std::runtime_error("row wider than header in '" + path + "'");
      }
      std::size_t pos = 0;
      cols[c].push_back(std::stod(item, &pos));
      if (pos != item.size()) {
        throw std::runtime_error("bad number '" + item + "' in '" + path +
                                 "'");
      }
      ++c;
    }
    if (c != cols.size()) {
      throw std::runtime_error("row narrower than header in '" + path + "'");
    }
  }
  for (std::vector<double>& col : cols) {
    table.columns.emplace_back(
        Eigen::Map<Eigen::ArrayXd>(col.data(),
                                   static_cast<Eigen::Index>(col.size())));
  }
  return table;
}

void Manifest::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

void Manifest::set(const std::string& key, const char* value) {
  set(key, std::string(value));
}

void Manifest::set(const std::string& key, double value) {
  set(key, format_float(value));
}

void Manifest::set(const std::string& key, long value) {
  set(key, std::to_string(value));
}

void Manifest::set(const std::string& key, bool value) {
  set(key, std::string(value ? "true" : "false"));
}

std::string Manifest::str() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += "=";
    out += v;
    out += "\n";
  }
  return out;
}

void Manifest::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << str();
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace kinwave
