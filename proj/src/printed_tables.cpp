// Copyright 2026 The becc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Verbatim transcriptions of the published parameter tables. Known typos
// are preserved here on purpose; diff_tables() is the audit that separates
// them from generator regressions.

#include "becc/params.hpp"

namespace becc {

const std::vector<PrintedT1Row>& printed_table1() {
  static const std::vector<PrintedT1Row> t = {
      {5, 16, 79, 64},          {6, 46, 274, 256},
      {7, 77, 533, 512},        {8, 131, 1048, 1024},
      {9, 231, 2075, 2048},     {10, 823, 8222, 8192},
      {11, 1493, 16417, 16384}, {12, 2734, 32804, 32768},
      {13, 5045, 65575, 65536}, {14, 9366, 131114, 131072},
      {15, 17480, 262189, 262144},
  };
  return t;
}

const std::vector<PrintedT2Row>& printed_table2() {
  static const std::vector<PrintedT2Row> t = {
      {5, 3, 170, 155},       {5, 4, 340, 320},
      {5, 5, 5780, 5755},     {5, 6, 11560, 11530},
      {6, 3, 396, 378},       {6, 4, 792, 768},
      {6, 5, 26136, 26106},   {6, 6, 52272, 52236},
      {7, 3, 910, 889},       {7, 4, 1820, 1792},
      {7, 5, 11300, 118265},  // n misses a digit; k matches 118300 - 35
      {7, 6, 236600, 236558}, {8, 3, 2064, 2040},
      {8, 4, 4128, 4096},     {9, 3, 4626, 4599},
      {9, 4, 9252, 9216},     {10, 3, 10260, 10230},
      {10, 4, 20520, 20480},  {11, 3, 22550, 22517},
      {11, 4, 45100, 45056},  {12, 3, 49176, 49140},
      {12, 4, 98352, 98304},  {13, 3, 106522, 106483},
      {13, 4, 213044, 212992}, {14, 3, 229404, 229362},
      {14, 4, 458808, 458752}, {15, 3, 491550, 491505},
  };
  return t;
}

const std::vector<PrintedKnRow>& printed_table3() {
  static const std::vector<PrintedKnRow> t = {
      {5, 32, 47},          {5, 64, 79},          {5, 128, 143},
      {5, 256, 276},        {5, 512, 537},        {5, 1024, 1049},
      {5, 2048, 2073},      {5, 4096, 4121},      {5, 8192, 8222},
      {5, 16384, 16419},    {5, 32768, 32803},    {5, 65536, 65571},
      {5, 131072, 131107},  {5, 262144, 262184},  {5, 524288, 524333},
      {6, 64, 82},          {6, 128, 146},        {6, 256, 274},
      {6, 512, 536},        {6, 1024, 1054},      {6, 2048, 2078},
      {6, 4096, 4126},      {6, 8192, 8222},      {6, 16384, 16414},
      {6, 32768, 32804},    {6, 65536, 65578},    {6, 131072, 131114},
      {6, 262144, 262186},  {6, 524288, 524330},  {7, 128, 149},
      {7, 256, 277},        {7, 512, 533},        {7, 1024, 1052},
      {7, 2048, 2083},      {7, 4096, 4131},      {7, 8192, 8227},
      {7, 16384, 16419},    {7, 32768, 32803},    {7, 65536, 65571},
      {7, 131072, 131114},  {7, 262144, 262193},  {7, 524288, 524337},
      {8, 256, 280},        {8, 512, 536},        {8, 1024, 1048},
      {8, 2048, 2080},      {8, 4096, 4128},      {8, 8192, 8232},
      {8, 16384, 16424},    {8, 32768, 32808},    {8, 65536, 65576},
      {8, 131072, 131112},  {8, 262144, 262184},  {8, 524288, 524328},
      {9, 512, 539},        {9, 1024, 1051},      {9, 2048, 2075},
      {9, 4096, 4123},      {9, 8192, 8228},      {9, 16384, 16429},
      {9, 32768, 32813},    {9, 65536, 65581},    {9, 131072, 131117},
      {9, 262144, 262189},  {9, 524288, 524333},  {10, 1024, 1054},
      {10, 2048, 2078},     {10, 4096, 4126},     {10, 8192, 8222},
      {10, 16384, 16424},   {10, 32768, 32818},   {10, 65536, 65586},
      {10, 131072, 131122}, {10, 262144, 262194}, {10, 524288, 524338},
      {11, 2048, 2081},     {11, 4096, 4129},     {11, 8192, 8225},
      {11, 16384, 16417},   {11, 32768, 32812},   {11, 65536, 65591},
      {11, 131072, 131127}, {11, 262144, 262199}, {11, 524288, 524343},
      {12, 4096, 4132},     {12, 8192, 8228},     {12, 16384, 16420},
      {12, 32768, 32804},   {12, 65536, 65584},   {12, 131072, 131132},
      {12, 262144, 262204}, {12, 524288, 524348}, {13, 8192, 8231},
      {13, 16384, 16423},   {13, 32768, 32807},   {13, 65536, 65575},
      {13, 131072, 131124}, {13, 262144, 262209}, {13, 524288, 524353},
      {14, 16384, 16426},   {14, 32768, 32810},   {14, 65536, 65578},
      {14, 131072, 131114}, {14, 262144, 262200},
      {14, 524288, 524344},  // r=4 capacity is exceeded; formula gives 524358
      {15, 32768, 32813},   {15, 65536, 65581},   {15, 131072, 131117},
      {15, 262144, 262189}, {15, 524288, 524348},
  };
  return t;
}

const std::vector<PrintedT4Row>& printed_table4() {
  static const std::vector<PrintedT4Row> t = {
      {5, 16, 340, 324},        {5, 21, 680, 659},
      {5, 26, 11560, 11534},    {6, 19, 792, 773},
      {6, 25, 1584, 1559},      {6, 31, 52272, 52241},
      {7, 22, 1820, 1798},      {7, 29, 3640, 3611},
      {7, 36, 236600, 236564},  {8, 25, 4128, 4103},
      {8, 33, 8256, 8223},      {9, 28, 9252, 9224},
      {9, 37, 18504, 18467},    {10, 31, 20520, 20489},
      {10, 41, 41040, 40999},   {11, 34, 45100, 45066},
      {11, 45, 90200, 90155},   {12, 37, 98352, 98315},
      {12, 49, 196704, 196655}, {13, 40, 213044, 213004},
      {13, 53, 426088, 426035}, {14, 43, 458808, 458765},
      {15, 46, 983100, 983054},
  };
  return t;
}

const std::vector<PrintedKnRow>& printed_table5() {
  static const std::vector<PrintedKnRow> t = {
      {5, 32, 48},          {5, 64, 80},          {5, 128, 144},
      {5, 256, 272},        {5, 512, 533},        {5, 1024, 1050},
      {5, 2048, 2074},      {5, 4096, 4122},      {5, 8192, 8218},
      {5, 16384, 16415},    {5, 32768, 32804},    {5, 65536, 65572},
      {5, 131072, 131108},  {5, 262144, 262180},  {5, 524288, 524329},
      {6, 64, 83},          {6, 128, 147},        {6, 256, 275},
      {6, 512, 531},        {6, 1024, 1049},      {6, 2048, 2079},
      {6, 4096, 4127},      {6, 8192, 8223},      {6, 16384, 16415},
      {6, 32768, 326799},   // stray digit; formula gives 32799
      {6, 65536, 65573},    {6, 131072, 131115},  {6, 262144, 262187},
      {6, 524288, 524331},  {7, 128, 150},        {7, 256, 278},
      {7, 512, 534},        {7, 1024, 1046},      {7, 2048, 2077},
      {7, 4096, 4132},      {7, 8192, 8228},      {7, 16384, 16420},
      {7, 32768, 32804},    {7, 65536, 65572},
      {7, 131072, 131104},  // formula gives 131108
      {7, 262144, 262187},  {7, 524288, 524338},  {8, 256, 281},
      {8, 512, 537},        {8, 1024, 1049},      {8, 2048, 2073},
      {8, 4096, 4121},      {8, 8192, 8225},      {8, 16384, 16425},
      {8, 32768, 32809},    {8, 65536, 65577},    {8, 131072, 131113},
      {8, 262144, 262185},  {8, 524288, 524329},  {9, 512, 540},
      {9, 1024, 1052},      {9, 2048, 2076},      {9, 4096, 4124},
      {9, 8192, 8220},      {9, 16384, 16421},    {9, 32768, 32814},
      {9, 65536, 65582},    {9, 131072, 131118},  {9, 262144, 262190},
      {9, 524288, 524334},  {10, 1024, 1055},     {10, 2048, 2079},
      {10, 4096, 4127},     {10, 8192, 8223},     {10, 16384, 16415},
      {10, 32768, 32809},   {10, 65536, 65587},   {10, 131072, 131123},
      {10, 262144, 262195}, {10, 524288, 524339},
      {11, 2048, 2080},     // formula gives 2082
      {11, 4096, 4130},     {11, 8192, 8226},     {11, 16384, 16418},
      {11, 32768, 32802},   {11, 65536, 65581},   {11, 131072, 131128},
      {11, 262144, 262200}, {11, 524288, 524344}, {12, 4096, 4133},
      {12, 8192, 8229},     {12, 16384, 16421},   {12, 32768, 32805},
      {12, 65536, 65573},   {12, 131072, 131121}, {12, 262144, 262205},
      {12, 524288, 524349}, {13, 8192, 8232},     {13, 16384, 16424},
      {13, 32768, 32808},   {13, 65536, 65576},
      {13, 31072, 131112},  // k drops a digit; the row is k=131072
      {13, 262144, 262197}, {13, 524288, 524354}, {14, 16384, 16427},
      {14, 32768, 32811},   {14, 65536, 65579},   {14, 131072, 131115},
      {14, 262144, 262187}, {14, 524288, 524345}, {15, 32768, 32814},
      {15, 65536, 65582},   {15, 131072, 131118}, {15, 262144, 262190},
      {15, 524288, 524334},
  };
  return t;
}

const std::vector<PrintedBestRow>& printed_table6() {
  static const std::vector<PrintedBestRow> t = {
      {5, 32, 47, {3}},           {5, 64, 79, {1, 3}},
      {5, 128, 143, {1, 3}},      {5, 256, 272, {5}},
      {5, 512, 533, {5}},         {5, 1024, 1049, {3}},
      {5, 2048, 2073, {3}},       {5, 4096, 4121, {3}},
      {5, 8192, 8218, {5}},       {5, 16384, 16415, {5}},
      {5, 32768, 32803, {3}},     {5, 65536, 65571, {3}},
      {5, 131072, 131107, {3}},   {5, 262144, 262180, {5}},
      {5, 524288, 524329, {5}},   {6, 64, 82, {3}},
      {6, 128, 146, {3}},         {6, 256, 274, {1, 3}},
      {6, 512, 531, {1}},         {6, 1024, 1049, {1}},
      {6, 2048, 2078, {3}},       {6, 4096, 4126, {3}},
      {6, 8192, 8222, {3}},       {6, 16384, 16414, {3}},
      {6, 32768, 32799, {5}},     {6, 65536, 65573, {5}},
      {6, 131072, 131114, {3}},   {6, 262144, 262186, {3}},
      {6, 524288, 524330, {3}},   {7, 128, 149, {3}},
      {7, 256, 277, {3}},         {7, 512, 533, {1, 3}},
      {7, 1024, 1046, {5}},       {7, 2048, 2077, {5}},
      {7, 4096, 4131, {3}},       {7, 8192, 8227, {3}},
      {7, 16384, 10419, {3}},     // n garbled; formula gives 16419
      {7, 32768, 32803, {3}},     {7, 65536, 65571, {3}},
      {7, 131072, 131108, {5}},   {7, 262144, 262187, {5}},
      {7, 524288, 524377, {3}},   // formula gives 524337
      {8, 256, 280, {3}},         {8, 512, 536, {3}},
      {8, 1024, 1048, {1, 3}},    {8, 2048, 2073, {5}},
      {8, 4096, 4121, {5}},       {8, 8192, 8225, {5}},
      {8, 16384, 16424, {3}},     {8, 32768, 32808, {3}},
      {8, 65536, 65576, {3}},     {8, 131072, 131112, {3}},
      {8, 262144, 262184, {3}},   {8, 524288, 524328, {3}},
      {9, 512, 539, {3}},         {9, 1024, 1051, {3}},
      {9, 2048, 2075, {1, 3}},    {9, 4096, 4123, {1, 3}},
      {9, 8192, 8220, {5}},       {9, 16384, 16421, {5}},
      {9, 32768, 32813, {3}},     {9, 65536, 65581, {3}},
      {9, 131072, 131117, {3}},   {9, 262144, 262189, {3}},
      {9, 524288, 524333, {3}},   {10, 1024, 1054, {3}},
      {10, 2048, 2078, {3}},      {10, 4096, 4126, {3}},
      {10, 8192, 8222, {1, 3}},   {10, 16384, 16415, {5}},
      {10, 32768, 32809, {5}},    {10, 65536, 65586, {3}},
      {10, 131072, 131122, {3}},  {10, 262144, 262194, {3}},
      {10, 524288, 524338, {3}},  {11, 2048, 2081, {3}},
      {11, 4096, 4129, {3}},      {11, 8192, 8225, {3}},
      {11, 16384, 16417, {1, 3}}, {11, 32768, 32802, {5}},
      {11, 65536, 65581, {5}},    {11, 131072, 131127, {3}},
      {11, 262144, 262199, {3}},  {11, 524288, 524343, {3}},
      {12, 4096, 4132, {3}},      {12, 8192, 8228, {3}},
      {12, 16384, 16420, {3}},    {12, 32768, 32804, {1, 3}},
      {12, 65536, 65573, {5}},    {12, 131072, 131121, {5}},
      {12, 262144, 262204, {3}},  {12, 524288, 524348, {3}},
      {13, 8192, 8231, {3}},      {13, 16384, 16423, {3}},
      {13, 32768, 32807, {3}},    {13, 65536, 65575, {1, 3}},
      {13, 131072, 131112, {5}},  {13, 262144, 262197, {5}},
      {13, 524288, 524353, {3}},  {14, 16384, 16426, {3}},
      {14, 32768, 32810, {3}},    {14, 65536, 65578, {3}},
      {14, 131072, 131114, {1, 3}},
      {14, 262144, 262187, {5}},
      {14, 524288, 524344, {3}},  // carries the Table-3 typo; (524345, 5)
      {15, 32768, 32813, {3}},    {15, 65536, 65581, {3}},
      {15, 131072, 131117, {3}},
      {15, 262144, 262189, {3}},  // also matches Table 1; credit omits it
      {15, 524288, 524334, {5}},
  };
  return t;
}

}  // namespace becc
