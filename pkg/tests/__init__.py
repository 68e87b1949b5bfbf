# tests