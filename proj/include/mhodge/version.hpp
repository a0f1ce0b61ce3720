#pragma once

#ifndef MHODGE_VERSION
#define MHODGE_VERSION "0.1.0"
#endif
