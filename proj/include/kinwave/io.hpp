#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace kinwave {

// Scientific notation with 17 significant digits: round-trips any double.
std::string format_float(double v);

// A numeric table with one header row, as stored in CSV files.
struct Table {
  std::vector<std::string> header;
  std::vector<Eigen::ArrayXd> columns;  // one per header entry, equal sizes
};

void write_csv(const std::string& path, const Table& table);
Table read_csv(const std::string& path);

// Ordered key-value document using the same key=value syntax as configs.
class Manifest {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, const char* value);
  void set(const std::string& key, double value);
  void set(const std::string& key, long value);
  void set(const std::string& key, bool value);

  std::string str() const;
  void write(const std::string& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace kinwave
